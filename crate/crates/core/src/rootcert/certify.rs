//! Certificates that the cofactor of a constituent has all its roots on the
//! vertical line `Re(x) = -((d - q_i)k - 2i)/2`.
//!
//! Two routes are available. The exact route recentres the cofactor on the
//! line, `g(y) = C(y + c)`, and asks whether every root of `g` is purely
//! imaginary: `g` must be even or odd, `g(y) = y^s w(y^2)`, and `w(-z)` must
//! have only real nonnegative roots, which a Sturm count decides. The numeric
//! route locates the roots and measures their distance from the line.

use num_traits::Zero;
use serde::Serialize;

use super::roots::{find_roots, ComplexRoot};
use crate::error::{Error, Result};
use crate::exactalg::{int, rat_to_f64, Rat, RatPoly, SturmChain};
use crate::quasipoly::FactoredConstituent;

pub const DEFAULT_TOL: f64 = 1e-9;

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(tag = "status")]
pub enum LineStatus {
    ExactCertified,
    NumericPass {
        #[serde(serialize_with = "crate::serial::float")]
        max_deviation: f64,
    },
    NumericFail {
        witness: ComplexRoot,
        #[serde(serialize_with = "crate::serial::float")]
        deviation: f64,
    },
    NotApplicable {
        reason: String,
    },
}

impl LineStatus {
    pub fn is_pass(&self) -> bool {
        matches!(
            self,
            LineStatus::ExactCertified | LineStatus::NumericPass { .. }
        )
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Sturm,
    Aberth,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RootCertificate {
    pub class: usize,
    pub q: usize,
    #[serde(serialize_with = "crate::serial::rat")]
    pub critical_abscissa: Rat,
    pub trivial_roots_verified: Vec<i64>,
    pub line_status: LineStatus,
    pub method: Method,
    #[serde(serialize_with = "crate::serial::float")]
    pub tolerance: f64,
    /// Which exact condition failed before falling back to the numeric route.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub exact_failure: Option<String>,
    pub cofactor_roots: Vec<ComplexRoot>,
}

/// Evaluates `H_i` exactly at each forced root `-(jk - i)`.
pub fn verify_trivial_roots(fc: &FactoredConstituent) -> Result<Vec<i64>> {
    let roots = fc.trivial_roots();
    for &n in &roots {
        let v = fc.constituent.eval(&int(n));
        if !v.is_zero() {
            return Err(Error::TheoremViolation(format!(
                "H_{}({n}) = {v}, expected 0",
                fc.i
            )));
        }
    }
    Ok(roots)
}

fn base_certificate(fc: &FactoredConstituent, tol: f64) -> Result<RootCertificate> {
    Ok(RootCertificate {
        class: fc.i,
        q: fc.q,
        critical_abscissa: fc.critical_abscissa(),
        trivial_roots_verified: verify_trivial_roots(fc)?,
        line_status: LineStatus::NotApplicable {
            reason: "not evaluated".into(),
        },
        method: Method::Aberth,
        tolerance: tol,
        exact_failure: None,
        cofactor_roots: Vec::new(),
    })
}

/// Certificate whose line status is `NotApplicable`; trivial roots are still
/// checked exactly.
pub fn not_applicable(
    fc: &FactoredConstituent,
    tol: f64,
    reason: String,
) -> Result<RootCertificate> {
    let mut cert = base_certificate(fc, tol)?;
    cert.line_status = LineStatus::NotApplicable { reason };
    Ok(cert)
}

pub fn certify_critical_line_numeric(
    fc: &FactoredConstituent,
    tol: f64,
) -> Result<RootCertificate> {
    let mut cert = base_certificate(fc, tol)?;
    let c = rat_to_f64(&cert.critical_abscissa);
    let roots = match fc.cofactor.degree() {
        Some(m) if m >= 1 => find_roots(&fc.cofactor, tol)?,
        _ => Vec::new(),
    };
    let worst = roots
        .iter()
        .map(|z| ((z.re - c).abs(), z))
        .max_by(|a, b| a.0.total_cmp(&b.0));
    cert.line_status = match worst {
        Some((dev, z)) if dev > tol => LineStatus::NumericFail {
            witness: z.clone(),
            deviation: dev,
        },
        Some((dev, _)) => LineStatus::NumericPass { max_deviation: dev },
        None => LineStatus::NumericPass { max_deviation: 0.0 },
    };
    cert.cofactor_roots = roots;
    Ok(cert)
}

/// Decides exactly whether every root of `cofactor` has real part `c`.
/// `Err` names the condition that failed.
pub fn roots_on_line_exact(cofactor: &RatPoly, c: &Rat) -> std::result::Result<(), String> {
    let Some(m) = cofactor.degree() else {
        return Err("cofactor is zero".into());
    };
    if m == 0 {
        return Ok(());
    }
    let g = cofactor.shift(c);
    let mut parity = None;
    for (j, a) in g.coeffs().iter().enumerate() {
        if a.is_zero() {
            continue;
        }
        match parity {
            None => parity = Some(j % 2),
            Some(p) if p != j % 2 => {
                return Err(format!(
                    "parity: recentred cofactor {g} mixes even and odd powers"
                ))
            }
            Some(_) => {}
        }
    }
    let s = parity.expect("nonzero");
    let w = RatPoly::new(g.coeffs().iter().skip(s).step_by(2).cloned().collect());
    if w.degree() == Some(0) {
        return Ok(());
    }
    let chain = SturmChain::new(&w.reflect()).map_err(|e| e.to_string())?;
    let sf_degree = chain.base().degree().expect("nonzero");
    let nonneg = chain.count_at_or_above(&Rat::zero());
    if nonneg == sf_degree {
        Ok(())
    } else {
        Err(format!(
            "sturm: w(-z) has {nonneg} of {sf_degree} distinct roots real and >= 0 (w = {w})"
        ))
    }
}

/// Exact certification first; on failure the numeric route at `tol` decides
/// the status and the failed exact condition is recorded.
pub fn certify_critical_line(fc: &FactoredConstituent, tol: f64) -> Result<RootCertificate> {
    match roots_on_line_exact(&fc.cofactor, &fc.critical_abscissa()) {
        Ok(()) => {
            let mut cert = base_certificate(fc, tol)?;
            cert.line_status = LineStatus::ExactCertified;
            cert.method = Method::Sturm;
            Ok(cert)
        }
        Err(why) => {
            let mut cert = match certify_critical_line_numeric(fc, tol) {
                Ok(cert) => cert,
                Err(Error::TheoremViolation(v)) => return Err(Error::TheoremViolation(v)),
                Err(e) => not_applicable(fc, tol, format!("numeric fallback failed: {e}"))?,
            };
            cert.exact_failure = Some(why);
            Ok(cert)
        }
    }
}

/// Exact certification with the numeric fallback at [`DEFAULT_TOL`].
pub fn certify_critical_line_exact(fc: &FactoredConstituent) -> Result<RootCertificate> {
    certify_critical_line(fc, DEFAULT_TOL)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::rat;
    use crate::genfun::GenFun;
    use crate::quasipoly::factor_constituent;

    fn fc(c: &[i64], k: usize, d: usize, i: usize) -> FactoredConstituent {
        factor_constituent(&GenFun::new(RatPoly::from_ints(c), k, d).unwrap(), i).unwrap()
    }

    #[test]
    fn exact_examples() {
        assert!(roots_on_line_exact(&RatPoly::from_ints(&[1, 2]), &rat(-1, 2)).is_ok());
        assert!(roots_on_line_exact(&RatPoly::from_ints(&[2, 2, 1]), &int(-1)).is_ok());
        let err = roots_on_line_exact(&RatPoly::from_ints(&[2, 3, 1]), &int(-1)).unwrap_err();
        assert!(err.starts_with("parity"), "{err}");
    }

    #[test]
    fn exact_detects_real_roots_off_line() {
        // (y^2 - 1): roots +-1, even but not imaginary
        let err = roots_on_line_exact(&RatPoly::from_ints(&[-1, 0, 1]), &Rat::zero()).unwrap_err();
        assert!(err.starts_with("sturm"), "{err}");
        // y^2 (y^2 + 1)^2 (y^2 + 4): all on the line, with repeats and a root at the centre
        let g = RatPoly::from_ints(&[0, 0, 1])
            * RatPoly::from_ints(&[1, 0, 1]).pow(2)
            * RatPoly::from_ints(&[4, 0, 1]);
        let c = rat(-3, 2);
        assert!(roots_on_line_exact(&g.shift(&-&c), &c).is_ok());
    }

    #[test]
    fn certify_k1_classic() {
        let f = fc(&[1, 1], 1, 2, 0);
        let cert = certify_critical_line_numeric(&f, 1e-9).unwrap();
        assert_eq!(cert.critical_abscissa, rat(-1, 2));
        assert_eq!(
            cert.line_status,
            LineStatus::NumericPass { max_deviation: 0.0 }
        );
        let cert = certify_critical_line_exact(&f).unwrap();
        assert_eq!(cert.line_status, LineStatus::ExactCertified);
        assert_eq!(cert.method, Method::Sturm);
    }

    #[test]
    fn certify_constant_cofactor_is_vacuous() {
        let f = fc(&[1], 2, 2, 0);
        let cert = certify_critical_line_numeric(&f, 1e-9).unwrap();
        assert_eq!(cert.trivial_roots_verified, vec![-2]);
        assert!(cert.cofactor_roots.is_empty());
        assert!(cert.line_status.is_pass());
    }

    #[test]
    fn certify_generated_quadratic_family() {
        let f = fc(&[1, 0, 1], 2, 3, 0);
        assert_eq!(f.critical_abscissa(), int(-2));
        let cert = certify_critical_line_numeric(&f, 1e-9).unwrap();
        assert!(cert.line_status.is_pass());
        assert_eq!(
            certify_critical_line_exact(&f).unwrap().line_status,
            LineStatus::ExactCertified
        );
    }

    #[test]
    fn fallback_reports_exact_failure() {
        // 1 + 2t^2 over (1 - t^2)^3: cofactor roots are off the line
        let f = fc(&[1, 0, 2], 2, 3, 0);
        let cert = certify_critical_line(&f, 1e-9).unwrap();
        assert!(cert.exact_failure.is_some());
        assert!(matches!(cert.line_status, LineStatus::NumericFail { .. }));
        assert_eq!(cert.method, Method::Aberth);
    }

    #[test]
    fn trivial_root_violation_detected() {
        let mut f = fc(&[0, 1], 2, 3, 1);
        f.constituent = RatPoly::from_ints(&[1, 1]);
        assert!(matches!(
            verify_trivial_roots(&f),
            Err(Error::TheoremViolation(_))
        ));
    }
}
