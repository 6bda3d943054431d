//! Seeded random campaign: closed form against the series oracle, forced
//! integer roots per class, and the global roots of `H_x`.

use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::Error;
use crate::exactalg::{int, Rat, RatPoly};
use crate::genfun::{interpolate_constituents, series_prefix, split_numerator, GenFun};
use crate::quasipoly::{
    constituents_closed_form, factor_constituent, global_trivial_roots, product_poly,
};

use super::parse::serialize_numerator;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct FuzzBounds {
    pub max_k: usize,
    pub max_d: usize,
    /// Coefficients are drawn from `[-coeff_max, coeff_max]`.
    pub coeff_max: i64,
}

impl Default for FuzzBounds {
    fn default() -> Self {
        FuzzBounds {
            max_k: 6,
            max_d: 6,
            coeff_max: 9,
        }
    }
}

/// Independent stream per trial, so results do not depend on scheduling.
pub fn trial_rng(seed: u64, trial: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(trial);
    rng
}

/// A random valid `U / (1 - t^k)^d` with `deg U` uniform in `0..kd`.
///
/// A third of the draws are sparsified (each non-leading coefficient zeroed
/// with probability 1/2) so empty residue classes show up regularly.
pub fn random_genfun<R: Rng>(rng: &mut R, b: &FuzzBounds) -> GenFun {
    let k = rng.random_range(1..=b.max_k.max(1));
    let d = rng.random_range(1..=b.max_d.max(1));
    let e = rng.random_range(0..k * d);
    let c = b.coeff_max.max(1);
    let sparse = rng.random_range(0..3) == 0;
    let mut coeffs: Vec<Rat> = (0..e)
        .map(|_| {
            if sparse && rng.random_bool(0.5) {
                int(0)
            } else {
                int(rng.random_range(-c..=c))
            }
        })
        .collect();
    let mut lead = 0;
    while lead == 0 {
        lead = rng.random_range(-c..=c);
    }
    coeffs.push(int(lead));
    GenFun::new(RatPoly::new(coeffs), k, d).expect("degree within kd - 1")
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TrialOutcome {
    pub trial: u64,
    pub numerator: String,
    pub k: usize,
    pub d: usize,
    pub global_checked: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub failure: Option<String>,
}

/// Runs every exact check on one generating function. `Ok(true)` when the
/// global-root check applied.
pub fn check_genfun(f: &GenFun) -> Result<bool, String> {
    let (k, d) = (f.k(), f.d());
    let closed = constituents_closed_form(f);
    let oracle =
        interpolate_constituents(&series_prefix(f, k * d + k), k, d).map_err(|e| e.to_string())?;
    for i in 0..k {
        if closed.constituent(i) != oracle.constituent(i) {
            return Err(format!(
                "class {i}: closed form {} != oracle {}",
                closed.constituent(i),
                oracle.constituent(i)
            ));
        }
    }
    let split = split_numerator(f);
    for (i, part) in split.parts.iter().enumerate() {
        let Some(q) = part.q else { continue };
        let h = closed.constituent(i);
        for j in 1..d.saturating_sub(q) {
            let n = -((j * k) as i64 - i as i64);
            if !h.eval(&int(n)).is_zero() {
                return Err(format!("class {i}: H_{i}({n}) != 0"));
            }
        }
        match factor_constituent(f, i) {
            Ok(fc) if fc.reassemble() == *h => {}
            Ok(_) => return Err(format!("class {i}: factorization does not reassemble")),
            Err(Error::TheoremViolation(m)) => return Err(m),
            Err(e) => return Err(e.to_string()),
        }
    }
    if split.parts.iter().any(|p| p.is_empty()) {
        return Ok(false);
    }
    let prod = product_poly(&closed).poly;
    for n in global_trivial_roots(f) {
        if !prod.eval(&int(n)).is_zero() {
            return Err(format!("H_x({n}) != 0"));
        }
    }
    Ok(true)
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FuzzSummary {
    pub seed: u64,
    pub trials: usize,
    pub bounds: FuzzBounds,
    pub passed: usize,
    pub failed: usize,
    pub global_checked: usize,
    pub failures: Vec<TrialOutcome>,
}

/// `forced` replaces the random draw in every trial.
pub fn fuzz_campaign(
    seed: u64,
    trials: usize,
    bounds: &FuzzBounds,
    forced: Option<&GenFun>,
) -> Result<FuzzSummary, Error> {
    if trials == 0 {
        return Err(Error::Usage("trials must be at least 1".into()));
    }
    let outcomes: Vec<TrialOutcome> = (0..trials as u64)
        .into_par_iter()
        .map(|t| {
            let f = match forced {
                Some(f) => f.clone(),
                None => random_genfun(&mut trial_rng(seed, t), bounds),
            };
            let res = check_genfun(&f);
            if let Err(m) = &res {
                log::warn!("trial {t} failed: {m}");
            }
            TrialOutcome {
                trial: t,
                numerator: serialize_numerator(f.numerator()),
                k: f.k(),
                d: f.d(),
                global_checked: matches!(res, Ok(true)),
                failure: res.err(),
            }
        })
        .collect();
    let failures: Vec<TrialOutcome> = outcomes
        .iter()
        .filter(|o| o.failure.is_some())
        .cloned()
        .collect();
    Ok(FuzzSummary {
        seed,
        trials,
        bounds: *bounds,
        passed: trials - failures.len(),
        failed: failures.len(),
        global_checked: outcomes.iter().filter(|o| o.global_checked).count(),
        failures,
    })
}
