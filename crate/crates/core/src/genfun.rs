//! The generating function `P(t) = U(t) / (1 - t^k)^d`, the residue-class
//! split of its numerator, and the power-series oracle.
//!
//! The oracle path (series expansion followed by interpolation) never touches
//! the closed-form constituent formulas in [`crate::quasipoly`], so the two can
//! be compared against each other.

use num_bigint::BigInt;
use num_integer::binomial;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exactalg::{Rat, RatPoly};
use crate::quasipoly::QuasiPoly;

/// A validated `U(t) / (1 - t^k)^d` with `U != 0` and `deg U <= kd - 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GenFun {
    numerator: RatPoly,
    k: usize,
    d: usize,
}

impl GenFun {
    pub fn new(numerator: RatPoly, k: usize, d: usize) -> Result<Self> {
        if k == 0 {
            return Err(Error::InvalidGenFun("k must be positive".into()));
        }
        if d == 0 {
            return Err(Error::InvalidGenFun("d must be positive".into()));
        }
        let Some(e) = numerator.degree() else {
            return Err(Error::ZeroNumerator);
        };
        if e > k * d - 1 {
            return Err(Error::InvalidGenFun(format!(
                "deg U = {e} exceeds kd - 1 = {}",
                k * d - 1
            )));
        }
        Ok(GenFun { numerator, k, d })
    }

    pub fn numerator(&self) -> &RatPoly {
        &self.numerator
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn d(&self) -> usize {
        self.d
    }

    /// Degree `e` of the numerator.
    pub fn e(&self) -> usize {
        self.numerator.degree().expect("validated nonzero")
    }
}

/// One residue class `U_i` of the numerator.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassPart {
    pub poly: RatPoly,
    /// `e_i = deg U_i`; `None` when `U_i = 0`.
    pub degree: Option<usize>,
    /// `q_i = (e_i - i) / k`; `None` when `U_i = 0`.
    pub q: Option<usize>,
}

impl ClassPart {
    pub fn is_empty(&self) -> bool {
        self.poly.is_zero()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NumeratorSplit {
    pub k: usize,
    pub parts: Vec<ClassPart>,
}

impl NumeratorSplit {
    pub fn part(&self, i: usize) -> &ClassPart {
        &self.parts[i]
    }
}

pub fn split_numerator(f: &GenFun) -> NumeratorSplit {
    let k = f.k;
    let mut buckets = vec![Vec::new(); k];
    for (j, c) in f.numerator.coeffs().iter().enumerate() {
        let b = &mut buckets[j % k];
        b.resize(j + 1, Rat::zero());
        b[j] = c.clone();
    }
    let parts = buckets
        .into_iter()
        .enumerate()
        .map(|(i, coeffs)| {
            let poly = RatPoly::new(coeffs);
            let degree = poly.degree();
            let q = degree.map(|e| (e - i) / k);
            ClassPart { poly, degree, q }
        })
        .collect();
    NumeratorSplit { k, parts }
}

/// `H(0), ..., H(N-1)`: the first `N` coefficients of `P(t)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeriesPrefix {
    pub values: Vec<Rat>,
}

impl SeriesPrefix {
    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }
}

/// Expands `P(t)` through the recurrence induced by the denominator:
/// `H(n) = c_n - sum_{m>=1} binom(d, m) (-1)^m H(n - km)`.
pub fn series_prefix(f: &GenFun, n_terms: usize) -> SeriesPrefix {
    let (k, d) = (f.k, f.d);
    // weights[m] = binom(d, m) (-1)^m, the coefficient of t^{km} in (1 - t^k)^d
    let weights: Vec<Rat> = (0..=d)
        .map(|m| {
            let b = binomial(BigInt::from(d), BigInt::from(m));
            Rat::from_integer(if m % 2 == 0 { b } else { -b })
        })
        .collect();
    let mut values: Vec<Rat> = Vec::with_capacity(n_terms);
    for n in 0..n_terms {
        let mut h = f.numerator.coeff(n);
        for (m, w) in weights.iter().enumerate().skip(1) {
            let Some(prev) = n.checked_sub(k * m) else {
                break;
            };
            h -= w * &values[prev];
        }
        values.push(h);
    }
    SeriesPrefix { values }
}

/// Exact Lagrange interpolation through `(x_m, y_m)`.
pub fn lagrange(points: &[(Rat, Rat)]) -> RatPoly {
    let mut acc = RatPoly::zero();
    for (m, (xm, ym)) in points.iter().enumerate() {
        if ym.is_zero() {
            continue;
        }
        let mut basis = RatPoly::one();
        let mut denom = Rat::one();
        for (l, (xl, _)) in points.iter().enumerate() {
            if l == m {
                continue;
            }
            basis = &basis * &RatPoly::linear(-xl);
            denom *= xm - xl;
        }
        acc = &acc + &basis.scale(&(ym / denom));
    }
    acc
}

/// Recovers constituents by interpolating `d` samples per residue class at
/// `n = i, i + k, ..., i + (d-1)k`.
pub fn interpolate_constituents(s: &SeriesPrefix, k: usize, d: usize) -> Result<QuasiPoly> {
    let needed = k * d;
    if s.len() < needed {
        return Err(Error::NotEnoughSamples {
            needed,
            got: s.len(),
        });
    }
    let constituents = (0..k)
        .map(|i| {
            let pts: Vec<(Rat, Rat)> = (0..d)
                .map(|m| {
                    let n = i + m * k;
                    (Rat::from_integer(BigInt::from(n)), s.values[n].clone())
                })
                .collect();
            lagrange(&pts)
        })
        .collect();
    Ok(QuasiPoly::new(k, constituents))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::{int, rat};

    fn gf(c: &[i64], k: usize, d: usize) -> GenFun {
        GenFun::new(RatPoly::from_ints(c), k, d).unwrap()
    }

    fn ints(v: &[i64]) -> Vec<Rat> {
        v.iter().map(|&x| int(x)).collect()
    }

    #[test]
    fn validation() {
        assert_eq!(
            GenFun::new(RatPoly::zero(), 1, 1),
            Err(Error::ZeroNumerator)
        );
        assert!(GenFun::new(RatPoly::from_ints(&[1, 1, 1]), 1, 2).is_err());
        assert!(GenFun::new(RatPoly::from_ints(&[1, 1, 1, 1]), 2, 2).is_ok());
        assert!(GenFun::new(RatPoly::one(), 0, 1).is_err());
        assert!(GenFun::new(RatPoly::one(), 1, 0).is_err());
    }

    #[test]
    fn split_examples() {
        let s = split_numerator(&gf(&[1, 1], 2, 2));
        assert_eq!(s.parts[0].poly, RatPoly::from_ints(&[1]));
        assert_eq!((s.parts[0].degree, s.parts[0].q), (Some(0), Some(0)));
        assert_eq!(s.parts[1].poly, RatPoly::from_ints(&[0, 1]));
        assert_eq!((s.parts[1].degree, s.parts[1].q), (Some(1), Some(0)));

        let s = split_numerator(&gf(&[1], 3, 1));
        assert!(s.parts[1].is_empty() && s.parts[2].is_empty());
        assert_eq!((s.parts[2].degree, s.parts[2].q), (None, None));

        let s = split_numerator(&gf(&[2, 3, 5, 7], 2, 2));
        assert_eq!(s.parts[0].poly, RatPoly::from_ints(&[2, 0, 5]));
        assert_eq!(s.parts[1].poly, RatPoly::from_ints(&[0, 3, 0, 7]));
        assert_eq!(s.parts[1].q, Some(1));
    }

    #[test]
    fn series_examples() {
        assert_eq!(
            series_prefix(&gf(&[1], 2, 2), 6).values,
            ints(&[1, 0, 2, 0, 3, 0])
        );
        assert_eq!(
            series_prefix(&gf(&[1], 1, 1), 4).values,
            ints(&[1, 1, 1, 1])
        );
        assert_eq!(
            series_prefix(&gf(&[1, 1], 1, 2), 4).values,
            ints(&[1, 3, 5, 7])
        );
    }

    #[test]
    fn interpolation_examples() {
        let q = interpolate_constituents(&series_prefix(&gf(&[1], 2, 2), 4), 2, 2).unwrap();
        assert_eq!(q.constituent(0), &RatPoly::new(vec![int(1), rat(1, 2)]));
        assert!(q.constituent(1).is_zero());

        let c = GenFun::new(RatPoly::constant(rat(-7, 3)), 1, 1).unwrap();
        let q = interpolate_constituents(&series_prefix(&c, 1), 1, 1).unwrap();
        assert_eq!(q.constituent(0), &RatPoly::constant(rat(-7, 3)));

        let q = interpolate_constituents(&series_prefix(&gf(&[1, 1], 1, 2), 2), 1, 2).unwrap();
        assert_eq!(q.constituent(0), &RatPoly::from_ints(&[1, 2]));
    }

    #[test]
    fn interpolation_needs_kd_samples() {
        let s = series_prefix(&gf(&[1], 2, 3), 5);
        assert_eq!(
            interpolate_constituents(&s, 2, 3),
            Err(Error::NotEnoughSamples { needed: 6, got: 5 })
        );
    }
}
