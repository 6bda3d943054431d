//! Runs every root statement about a generating function and collects the
//! verdicts per class plus one global record.

use num_traits::Zero;
use rayon::prelude::*;
use serde::Serialize;

use super::certify::{certify_critical_line, not_applicable, LineStatus, RootCertificate};
use super::unit_circle::{check_unit_circle, UnitCircleReport};
use crate::error::{Error, Result};
use crate::exactalg::int;
use crate::genfun::{split_numerator, GenFun, NumeratorSplit};
use crate::quasipoly::{
    constituents_closed_form, factor_constituent, global_trivial_roots, product_poly,
    trivial_factor,
};

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ClassResult {
    pub class: usize,
    pub empty: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub q: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub unit_circle: Option<UnitCircleReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub certificate: Option<RootCertificate>,
    /// The line check counts toward the verdict (unit-circle hypothesis held).
    pub asserted: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub violation: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(tag = "status")]
pub enum GlobalStatus {
    Verified { roots: Vec<i64> },
    NotApplicable { reason: String },
    Violated { n: i64 },
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct GlobalCheck {
    pub status: GlobalStatus,
    /// For `k = 1`: whether `h_{d-e-1}` divides `H` exactly.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k1_trivial_divides: Option<bool>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SuiteReport {
    pub classes: Vec<ClassResult>,
    pub global: GlobalCheck,
    pub passed: bool,
}

impl SuiteReport {
    pub fn violations(&self) -> Vec<String> {
        let mut v: Vec<String> = self
            .classes
            .iter()
            .filter_map(|c| c.violation.clone())
            .collect();
        if let GlobalStatus::Violated { n } = self.global.status {
            v.push(format!("H_x({n}) != 0"));
        }
        if self.global.k1_trivial_divides == Some(false) {
            v.push("h_{d-e-1} does not divide H".into());
        }
        v
    }
}

fn check_class(f: &GenFun, split: &NumeratorSplit, i: usize, tol: f64) -> Result<ClassResult> {
    let part = split.part(i);
    let mut res = ClassResult {
        class: i,
        empty: part.is_empty(),
        q: part.q,
        unit_circle: None,
        certificate: None,
        asserted: false,
        violation: None,
    };
    if res.empty {
        return Ok(res);
    }
    let fc = match factor_constituent(f, i) {
        Ok(fc) => fc,
        Err(Error::TheoremViolation(msg)) => {
            res.violation = Some(msg);
            return Ok(res);
        }
        Err(e) => return Err(e),
    };
    let uc = check_unit_circle(split, i, tol)?;
    let cert = if uc.hypothesis_holds {
        res.asserted = true;
        certify_critical_line(&fc, tol)
    } else {
        let why = if uc.at_one_nonzero {
            format!(
                "unit-circle hypothesis fails: max ||root| - 1| = {:e}",
                uc.max_modulus_deviation
            )
        } else {
            "unit-circle hypothesis fails: U_i(1) = 0".to_string()
        };
        not_applicable(&fc, tol, why)
    };
    match cert {
        Ok(cert) => {
            if res.asserted {
                match &cert.line_status {
                    LineStatus::NumericFail { witness, deviation } => {
                        res.violation = Some(format!(
                            "class {i}: cofactor root {} + {}i is {deviation:e} off the critical line",
                            witness.re, witness.im
                        ));
                    }
                    LineStatus::NotApplicable { reason } => {
                        res.violation =
                            Some(format!("class {i}: line check inconclusive: {reason}"));
                    }
                    _ => {}
                }
            }
            res.certificate = Some(cert);
        }
        Err(Error::TheoremViolation(msg)) => res.violation = Some(msg),
        Err(e) => return Err(e),
    }
    res.unit_circle = Some(uc);
    Ok(res)
}

fn global_check(f: &GenFun, split: &NumeratorSplit) -> GlobalCheck {
    let quasi = constituents_closed_form(f);
    let k1_trivial_divides = (f.k() == 1).then(|| {
        let a = f.d() as i64 - f.e() as i64 - 1;
        let h = trivial_factor(a, 1, 0);
        let (_, r) = quasi.constituent(0).divrem(&h).expect("h is nonzero");
        r.is_zero()
    });
    if let Some(i) = split.parts.iter().position(|p| p.is_empty()) {
        return GlobalCheck {
            status: GlobalStatus::NotApplicable {
                reason: format!("U_{i} = 0"),
            },
            k1_trivial_divides,
        };
    }
    let prod = product_poly(&quasi).poly;
    let roots = global_trivial_roots(f);
    let status = match roots.iter().find(|&&n| !prod.eval(&int(n)).is_zero()) {
        Some(&n) => GlobalStatus::Violated { n },
        None => GlobalStatus::Verified { roots },
    };
    GlobalCheck {
        status,
        k1_trivial_divides,
    }
}

/// Per class: unit-circle report, exact trivial roots, and a critical-line
/// certificate that only counts when the hypothesis holds. Globally: the
/// integer roots of `H_x` when no class is empty.
pub fn verify_theorem_suite(f: &GenFun, tol: f64) -> Result<SuiteReport> {
    let split = split_numerator(f);
    let classes = (0..f.k())
        .into_par_iter()
        .map(|i| check_class(f, &split, i, tol))
        .collect::<Result<Vec<_>>>()?;
    let global = global_check(f, &split);
    let mut report = SuiteReport {
        classes,
        global,
        passed: true,
    };
    report.passed = report.violations().is_empty();
    Ok(report)
}
