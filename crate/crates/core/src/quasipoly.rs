//! Closed-form constituents of the Hilbert quasipolynomial, extraction of the
//! forced integer-root factor, and the product `H_x` of all constituents.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exactalg::{int, Rat, RatPoly};
use crate::genfun::{split_numerator, GenFun};

/// `k` constituent polynomials; `H(n) = H_{n mod k}(n)`.
///
/// `k` is the period bound taken from the generating function, not
/// necessarily the minimal period.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuasiPoly {
    k: usize,
    constituents: Vec<RatPoly>,
}

impl QuasiPoly {
    pub fn new(k: usize, constituents: Vec<RatPoly>) -> Self {
        assert_eq!(constituents.len(), k, "one constituent per residue class");
        QuasiPoly { k, constituents }
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn constituent(&self, i: usize) -> &RatPoly {
        &self.constituents[i]
    }

    pub fn constituents(&self) -> &[RatPoly] {
        &self.constituents
    }

    /// `H(n)` for `n >= 0`.
    pub fn eval(&self, n: usize) -> Rat {
        self.constituents[n % self.k].eval(&Rat::from_integer(BigInt::from(n)))
    }
}

/// `h_{a,k,i}(x) = (x + k - i)(x + 2k - i)...(x + ak - i)`, or `1` when `a < 1`.
pub fn trivial_factor(a: i64, k: usize, i: usize) -> RatPoly {
    debug_assert!(i <= k);
    let shifts: Vec<Rat> = (1..=a.max(0))
        .map(|j| int(j * k as i64 - i as i64))
        .collect();
    RatPoly::from_linear_factors(&shifts)
}

/// `1 / ((d-1)! k^{d-1})`.
pub fn constituent_scale(k: usize, d: usize) -> Rat {
    let fact: BigInt = (1..d).map(BigInt::from).product();
    let kp = BigInt::from(k).pow((d - 1) as u32);
    Rat::new(BigInt::one(), fact * kp)
}

/// Constituent contributed by the single term `c t^j`: it lands in class
/// `r = j mod k` as `c/((d-1)! k^{d-1}) (n + k - j)(n + 2k - j)...(n + (d-1)k - j)`.
pub fn constituent_single_power(c: &Rat, j: usize, k: usize, d: usize) -> Result<(usize, RatPoly)> {
    let max = k * d - 1;
    if j > max {
        return Err(Error::ExponentOutOfRange { j, max });
    }
    let shifts: Vec<Rat> = (1..d).map(|m| int((m * k) as i64 - j as i64)).collect();
    let poly = RatPoly::from_linear_factors(&shifts).scale(&(c * constituent_scale(k, d)));
    Ok((j % k, poly))
}

/// Sums single-power constituents over the monomials of `U`.
pub fn constituents_closed_form(f: &GenFun) -> QuasiPoly {
    let (k, d) = (f.k(), f.d());
    let mut hs = vec![RatPoly::zero(); k];
    for (j, c) in f.numerator().coeffs().iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let (r, h) = constituent_single_power(c, j, k, d).expect("deg U <= kd - 1");
        hs[r] = &hs[r] + &h;
    }
    QuasiPoly::new(k, hs)
}

/// `H_i = scale * trivial * cofactor`, with `trivial = h_{d-1-q_i, k, i}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FactoredConstituent {
    pub i: usize,
    pub k: usize,
    pub d: usize,
    pub q: usize,
    pub scale: Rat,
    pub trivial: RatPoly,
    pub cofactor: RatPoly,
    pub constituent: RatPoly,
}

impl FactoredConstituent {
    /// `a = d - 1 - q_i`, the number of forced integer roots when positive.
    pub fn trivial_count(&self) -> i64 {
        self.d as i64 - 1 - self.q as i64
    }

    /// `-(jk - i)` for `j = 1..=d-1-q_i`.
    pub fn trivial_roots(&self) -> Vec<i64> {
        (1..=self.trivial_count().max(0))
            .map(|j| -(j * self.k as i64 - self.i as i64))
            .collect()
    }

    /// Abscissa `-((d - q_i) k - 2i) / 2` of the line carrying the cofactor roots.
    pub fn critical_abscissa(&self) -> Rat {
        let twice = (self.d as i64 - self.q as i64) * self.k as i64 - 2 * self.i as i64;
        Rat::new(BigInt::from(-twice), BigInt::from(2))
    }

    pub fn reassemble(&self) -> RatPoly {
        (&self.trivial * &self.cofactor).scale(&self.scale)
    }
}

/// Splits `H_i` into its forced integer-root factor and cofactor by exact
/// division. A nonzero remainder means the forced roots are missing.
pub fn factor_constituent(f: &GenFun, i: usize) -> Result<FactoredConstituent> {
    let split = split_numerator(f);
    let part = split
        .parts
        .get(i)
        .ok_or_else(|| Error::InvalidGenFun(format!("class {i} out of range for k = {}", f.k())))?;
    let q = part.q.ok_or(Error::EmptyClass(i))?;
    let (k, d) = (f.k(), f.d());
    let hi = class_constituent(f, i);
    let scale = constituent_scale(k, d);
    let trivial = trivial_factor(d as i64 - 1 - q as i64, k, i);
    let (cofactor, rem) = hi.divrem(&trivial.scale(&scale))?;
    if !rem.is_zero() {
        return Err(Error::TheoremViolation(format!(
            "class {i}: trivial factor {trivial} does not divide H_{i} = {hi} (remainder {rem})"
        )));
    }
    Ok(FactoredConstituent {
        i,
        k,
        d,
        q,
        scale,
        trivial,
        cofactor,
        constituent: hi,
    })
}

/// `H_i` alone, from the terms of `U_i`.
fn class_constituent(f: &GenFun, i: usize) -> RatPoly {
    let (k, d) = (f.k(), f.d());
    f.numerator()
        .coeffs()
        .iter()
        .enumerate()
        .filter(|(j, c)| j % k == i && !c.is_zero())
        .map(|(j, c)| constituent_single_power(c, j, k, d).expect("in range").1)
        .fold(RatPoly::zero(), |acc, h| &acc + &h)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProductPoly {
    pub poly: RatPoly,
}

pub fn product_poly(q: &QuasiPoly) -> ProductPoly {
    let poly = q
        .constituents()
        .iter()
        .fold(RatPoly::one(), |acc, h| &acc * h);
    ProductPoly { poly }
}

/// The integers `-1, ..., -(dk - e - 1)` that every `H_x` vanishes on when
/// no numerator class is empty. Empty when `dk - e - 1 < 1`.
pub fn global_trivial_roots(f: &GenFun) -> Vec<i64> {
    let top = (f.d() * f.k()) as i64 - f.e() as i64 - 1;
    (1..=top.max(0)).map(|n| -n).collect()
}
