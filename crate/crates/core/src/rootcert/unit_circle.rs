use num_traits::{One, Zero};
use serde::Serialize;

use super::roots::{find_roots, ComplexRoot};
use crate::error::{Error, Result};
use crate::exactalg::{Rat, RatPoly};
use crate::genfun::NumeratorSplit;

/// Whether a numerator class satisfies the unit-circle hypothesis:
/// `U_i(1) != 0` and every nonzero root has modulus one.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct UnitCircleReport {
    pub class: usize,
    /// Largest power of `t` dividing `U_i` (at least `i`).
    pub stripped_exponent: usize,
    pub at_one_nonzero: bool,
    /// Coefficients of `U_i / t^s` read the same reversed, up to sign.
    pub self_inversive: bool,
    pub nonzero_roots: Vec<ComplexRoot>,
    #[serde(serialize_with = "crate::serial::float")]
    pub max_modulus_deviation: f64,
    #[serde(serialize_with = "crate::serial::float")]
    pub tolerance: f64,
    pub hypothesis_holds: bool,
}

/// Exact test for `p(x) = ±x^n p(1/x)`, the real-coefficient form of
/// self-inversiveness.
pub fn is_self_inversive(p: &RatPoly) -> bool {
    let c = p.coeffs();
    let rev = c.iter().rev();
    let same = c.iter().zip(rev.clone()).all(|(a, b)| a == b);
    let anti = c.iter().zip(rev).all(|(a, b)| *a == -b);
    !c.is_empty() && (same || anti)
}

pub fn check_unit_circle(split: &NumeratorSplit, i: usize, tol: f64) -> Result<UnitCircleReport> {
    let part = split.parts.get(i).ok_or(Error::EmptyClass(i))?;
    if part.is_empty() {
        return Err(Error::EmptyClass(i));
    }
    let s = part.poly.valuation().expect("nonzero");
    let stripped = part.poly.shift_down(s);
    let at_one_nonzero = !part.poly.eval(&Rat::one()).is_zero();
    let nonzero_roots = if stripped.degree() == Some(0) {
        Vec::new()
    } else {
        find_roots(&stripped, tol)?
    };
    let max_modulus_deviation = nonzero_roots
        .iter()
        .map(|z| (z.as_complex().norm() - 1.0).abs())
        .fold(0.0, f64::max);
    Ok(UnitCircleReport {
        class: i,
        stripped_exponent: s,
        at_one_nonzero,
        self_inversive: is_self_inversive(&stripped),
        hypothesis_holds: at_one_nonzero && max_modulus_deviation <= tol,
        nonzero_roots,
        max_modulus_deviation,
        tolerance: tol,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::genfun::{split_numerator, GenFun};

    fn split(c: &[i64], k: usize, d: usize) -> NumeratorSplit {
        split_numerator(&GenFun::new(RatPoly::from_ints(c), k, d).unwrap())
    }

    #[test]
    fn odd_class_on_circle() {
        let r = check_unit_circle(&split(&[0, 1, 0, 1], 2, 2), 1, 1e-9).unwrap();
        assert_eq!(r.stripped_exponent, 1);
        assert_eq!(r.nonzero_roots.len(), 2);
        assert!(r.max_modulus_deviation < 1e-15);
        assert!(r.at_one_nonzero && r.self_inversive && r.hypothesis_holds);
    }

    #[test]
    fn roots_inside_circle() {
        let r = check_unit_circle(&split(&[1, 0, 2], 2, 3), 0, 1e-9).unwrap();
        let expected = 1.0 - std::f64::consts::FRAC_1_SQRT_2;
        assert!((r.max_modulus_deviation - expected).abs() < 1e-12);
        assert!(!r.self_inversive);
        assert!(!r.hypothesis_holds);
    }

    #[test]
    fn root_at_one() {
        let r = check_unit_circle(&split(&[1, 0, -1], 2, 2), 0, 1e-9).unwrap();
        assert!(!r.at_one_nonzero);
        assert!(r.max_modulus_deviation < 1e-15);
        assert!(r.self_inversive);
        assert!(!r.hypothesis_holds);
    }

    #[test]
    fn monomial_class_is_vacuous() {
        let r = check_unit_circle(&split(&[0, 0, 0, 5], 2, 2), 1, 1e-9).unwrap();
        assert_eq!(r.stripped_exponent, 3);
        assert!(r.nonzero_roots.is_empty());
        assert!(r.hypothesis_holds);
    }

    #[test]
    fn empty_class() {
        assert_eq!(
            check_unit_circle(&split(&[1], 2, 2), 1, 1e-9),
            Err(Error::EmptyClass(1))
        );
    }

    #[test]
    fn self_inversive_detection() {
        assert!(is_self_inversive(&RatPoly::from_ints(&[1, 2, 1])));
        assert!(is_self_inversive(&RatPoly::from_ints(&[1, 0, -1])));
        assert!(!is_self_inversive(&RatPoly::from_ints(&[1, 2, 3])));
        assert!(!is_self_inversive(&RatPoly::zero()));
    }
}
