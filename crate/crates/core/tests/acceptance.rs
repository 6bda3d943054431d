//! Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any
//! criterion fails.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_traits::Zero;
use rand::seq::IndexedRandom;
use rand::Rng;

use quasihilb::cli::fuzz::{random_genfun, trial_rng, FuzzBounds};
use quasihilb::cli::{run, Command, JobSpec, EXIT_OK};
use quasihilb::exactalg::{int, rat, Rat, RatPoly};
use quasihilb::genfun::{interpolate_constituents, series_prefix, split_numerator, GenFun};
use quasihilb::quasipoly::{
    constituents_closed_form, factor_constituent, global_trivial_roots, product_poly,
    trivial_factor,
};
use quasihilb::rootcert::{
    certify_critical_line, certify_critical_line_exact, certify_critical_line_numeric,
    check_unit_circle, find_roots, generate_unit_circle_family, verify_theorem_suite, AlphaSpec,
    LineStatus,
};

const SEED_RANDOM: u64 = 0x5eed_0001;
const SEED_FAMILY: u64 = 0x5eed_0002;

struct Verdict {
    ok: bool,
    detail: String,
}

fn verdict(ok: bool, detail: impl Into<String>) -> Verdict {
    Verdict {
        ok,
        detail: detail.into(),
    }
}

fn gf(c: &[i64], k: usize, d: usize) -> GenFun {
    GenFun::new(RatPoly::from_ints(c), k, d).unwrap()
}

fn criterion_1() -> Verdict {
    let f = gf(&[1], 2, 2);
    let start = Instant::now();
    let q = constituents_closed_form(&f);
    let s = series_prefix(&f, 6);
    let took = start.elapsed();
    let h0 = RatPoly::new(vec![int(1), rat(1, 2)]);
    let series: Vec<Rat> = [1, 0, 2, 0, 3, 0].iter().map(|&v| int(v)).collect();
    let ok_vals = q.constituent(0) == &h0 && q.constituent(1).is_zero() && s.values == series;
    verdict(
        ok_vals && took < Duration::from_millis(1),
        format!(
            "H_0 = {}, H_1 = {}, runtime {took:?}",
            q.constituent(0),
            q.constituent(1)
        ),
    )
}

/// Criteria 2, 3 and 4 share the same 500 seeded cases.
fn criteria_2_to_4() -> [Verdict; 3] {
    let bounds = FuzzBounds {
        max_k: 6,
        max_d: 6,
        coeff_max: 9,
    };
    let cases: Vec<GenFun> = (0..500)
        .map(|t| random_genfun(&mut trial_rng(SEED_RANDOM, t), &bounds))
        .collect();

    let start = Instant::now();
    let mut oracle_bad = Vec::new();
    let mut prop_bad = Vec::new();
    let mut global_bad = Vec::new();
    let mut classes_checked = 0;
    let mut global_cases = 0;
    for (t, f) in cases.iter().enumerate() {
        let (k, d) = (f.k(), f.d());
        let closed = constituents_closed_form(f);
        let oracle = interpolate_constituents(&series_prefix(f, k * d), k, d).unwrap();
        if closed != oracle {
            oracle_bad.push(t);
        }

        let split = split_numerator(f);
        for (i, part) in split.parts.iter().enumerate() {
            let Some(q) = part.q else { continue };
            classes_checked += 1;
            let h = closed.constituent(i);
            let roots_ok = (1..d - q).all(|j| h.eval(&int(i as i64 - (j * k) as i64)).is_zero());
            let divides = h
                .divrem(&trivial_factor((d - 1 - q) as i64, k, i))
                .is_ok_and(|(_, r)| r.is_zero());
            let factor_ok = factor_constituent(f, i).is_ok_and(|fc| fc.reassemble() == *h);
            if !(roots_ok && divides && factor_ok) {
                prop_bad.push((t, i));
            }
        }

        if split.parts.iter().all(|p| !p.is_empty()) {
            global_cases += 1;
            let prod = product_poly(&closed).poly;
            if !global_trivial_roots(f)
                .iter()
                .all(|&n| prod.eval(&int(n)).is_zero())
            {
                global_bad.push(t);
            }
        }
    }
    let took = start.elapsed();
    let fast = took < Duration::from_secs(10);
    [
        verdict(
            oracle_bad.is_empty() && fast,
            format!("500 cases, mismatches {oracle_bad:?}, runtime {took:?}"),
        ),
        verdict(
            prop_bad.is_empty(),
            format!("{classes_checked} nonempty classes, failures {prop_bad:?}"),
        ),
        verdict(
            global_bad.is_empty() && global_cases > 0,
            format!("{global_cases} cases with every class nonempty, failures {global_bad:?}"),
        ),
    ]
}

struct FamilyCase {
    f: GenFun,
    class: usize,
    alphas: Vec<AlphaSpec>,
}

/// `k <= 4`, `d <= 6`, at most 4 steps, alphas of order 2, 3, 4 or 6.
fn family_cases() -> Vec<FamilyCase> {
    (0..100)
        .map(|t| {
            let mut rng = trial_rng(SEED_FAMILY, t);
            let k = rng.random_range(1..=4usize);
            let d = rng.random_range(2..=6usize);
            let class = rng.random_range(0..k);
            let mut budget = rng.random_range(1..=(d - 1).min(4));
            let mut alphas = Vec::new();
            while budget > 0 {
                let den = if budget == 1 {
                    2
                } else {
                    *[2i64, 3, 4, 6].choose(&mut rng).unwrap()
                };
                let num = *(1..den)
                    .filter(|n| num_integer::gcd(*n, den) == 1)
                    .collect::<Vec<_>>()
                    .choose(&mut rng)
                    .unwrap();
                let a = AlphaSpec::new(num, den);
                budget -= a.steps().unwrap();
                alphas.push(a);
            }
            let mut c = 0;
            while c == 0 {
                c = rng.random_range(-9..=9i64);
            }
            let f = generate_unit_circle_family(k, d, class, &alphas, &int(c)).unwrap();
            FamilyCase { f, class, alphas }
        })
        .collect()
}

fn criterion_5(cases: &[FamilyCase]) -> Verdict {
    let start = Instant::now();
    let mut bad = Vec::new();
    let mut exact = 0;
    let mut worst: f64 = 0.0;
    for (t, c) in cases.iter().enumerate() {
        let fc = factor_constituent(&c.f, c.class).unwrap();
        let cert = certify_critical_line(&fc, 1e-8).unwrap();
        let suite = verify_theorem_suite(&c.f, 1e-8).unwrap();
        let asserted = suite.classes[c.class].asserted;
        let ok = match cert.line_status {
            LineStatus::ExactCertified => {
                exact += 1;
                true
            }
            LineStatus::NumericPass { max_deviation } => {
                worst = worst.max(max_deviation);
                max_deviation <= 1e-8
            }
            _ => false,
        };
        if !(ok && asserted && suite.passed) {
            bad.push(format!(
                "#{t} U={} k={} d={} alphas={:?}",
                c.f.numerator(),
                c.f.k(),
                c.f.d(),
                c.alphas
            ));
        }
    }
    let took = start.elapsed();
    verdict(
        bad.is_empty() && took < Duration::from_secs(30),
        format!(
            "100 families, {exact} exact, worst numeric deviation {worst:e}, failures {bad:?}, runtime {took:?}"
        ),
    )
}

fn criterion_6() -> Verdict {
    // U = 1 + t, d = 2: H = 2n + 1
    let f = gf(&[1, 1], 1, 2);
    let h = constituents_closed_form(&f).constituent(0).clone();
    let first = h == RatPoly::from_ints(&[1, 2]) && h.eval(&rat(-1, 2)).is_zero();

    // U = (1 + t)^2, d = 3: H = 2n^2 + 2n + 1, trivial factor h_0 = 1
    let f = gf(&[1, 2, 1], 1, 3);
    let fc = factor_constituent(&f, 0).unwrap();
    let trivial_ok = fc.trivial == trivial_factor(0, 1, 0) && fc.reassemble() == fc.constituent;
    let roots = find_roots(&fc.cofactor, 1e-12).unwrap();
    let dev = |line: f64| {
        roots
            .iter()
            .map(|z| (z.re - line).abs())
            .fold(0.0, f64::max)
    };
    let literal = dev(-1.0) <= 1e-9;
    let derived = dev(-0.5) <= 1e-9
        && matches!(
            certify_critical_line_exact(&fc).unwrap().line_status,
            LineStatus::ExactCertified
        );
    verdict(
        first && trivial_ok && literal,
        format!(
            "U=1+t: H={h} {}; U=(1+t)^2: H={}, trivial factor exact {trivial_ok}, \
             roots on Re=-1 within 1e-9 {literal} (max |Re+1| = {:.3}), \
             roots on Re=-1/2 exact {derived}",
            if first { "root -1/2 ok" } else { "WRONG" },
            fc.constituent,
            dev(-1.0)
        ),
    )
}

fn criterion_7() -> Verdict {
    let f = gf(&[1, 0, 2], 2, 3);
    let uc = check_unit_circle(&split_numerator(&f), 0, 1e-9).unwrap();
    let expected = 1.0 - 1.0 / 2f64.sqrt();
    let dev_ok = (uc.max_modulus_deviation - expected).abs() <= 1e-9;
    let suite = verify_theorem_suite(&f, 1e-9).unwrap();
    let not_applicable = matches!(
        suite.classes[0]
            .certificate
            .as_ref()
            .map(|c| &c.line_status),
        Some(LineStatus::NotApplicable { .. })
    );
    let mut job = JobSpec::new(Command::Certify);
    job.numerator = Some("1+2t^2".into());
    job.k = Some(2);
    job.d = Some(3);
    let code = run(&job).exit_code();
    verdict(
        !uc.hypothesis_holds && dev_ok && not_applicable && code == EXIT_OK,
        format!(
            "hypothesis_holds {}, max_modulus_deviation {:.17}, line NotApplicable {not_applicable}, exit {code}",
            uc.hypothesis_holds, uc.max_modulus_deviation
        ),
    )
}

fn criterion_8(cases: &[FamilyCase]) -> Verdict {
    let mut bad = Vec::new();
    for (t, c) in cases.iter().enumerate() {
        let fc = factor_constituent(&c.f, c.class).unwrap();
        let exact = certify_critical_line_exact(&fc).unwrap();
        let numeric = certify_critical_line_numeric(&fc, 1e-8).unwrap();
        let agree = matches!(exact.line_status, LineStatus::ExactCertified)
            && matches!(numeric.line_status, LineStatus::NumericPass { .. });
        if !agree {
            bad.push(format!(
                "#{t} U={} k={} d={}: exact {:?}, numeric {:?}",
                c.f.numerator(),
                c.f.k(),
                c.f.d(),
                exact.line_status,
                numeric.line_status
            ));
        }
    }
    verdict(
        bad.is_empty(),
        format!(
            "{} rational-alpha families, disagreements {bad:?}",
            cases.len()
        ),
    )
}

fn main() -> ExitCode {
    let start = Instant::now();
    let mut results = vec![criterion_1()];
    results.extend(criteria_2_to_4());
    let families = family_cases();
    results.push(criterion_5(&families));
    results.push(criterion_6());
    results.push(criterion_7());
    results.push(criterion_8(&families));

    let mut failed = 0;
    for (n, v) in results.iter().enumerate() {
        if !v.ok {
            failed += 1;
        }
        println!(
            "criterion {}: {}  {}",
            n + 1,
            if v.ok { "PASS" } else { "FAIL" },
            v.detail
        );
    }
    println!(
        "acceptance: {} of {} passed in {:?}",
        results.len() - failed,
        results.len(),
        start.elapsed()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
