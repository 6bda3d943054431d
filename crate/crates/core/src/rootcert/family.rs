//! Numerators whose class `i` satisfies the unit-circle hypothesis by
//! construction: `U(t) = c t^i ∏ (t^k - α)` over roots of unity `α != 1`.

use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use num_traits::Zero;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactalg::{Rat, RatPoly};
use crate::genfun::GenFun;

/// The root of unity `e^{2πi num/den}`.
///
/// A non-real `α` always stands for the conjugate pair `{α, ᾱ}`, contributing
/// `t^{2k} - 2cos(2π num/den) t^k + 1`, so it uses two of the degree steps.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct AlphaSpec {
    pub num: i64,
    pub den: i64,
}

impl AlphaSpec {
    pub fn new(num: i64, den: i64) -> Self {
        AlphaSpec { num, den }
    }

    /// `(num mod den, den)` in lowest terms.
    fn reduced(&self) -> Result<(i64, i64)> {
        if self.den <= 0 {
            return Err(Error::Usage(format!(
                "alpha denominator must be positive, got {}",
                self.den
            )));
        }
        let n = self.num.rem_euclid(self.den);
        let g = n.gcd(&self.den);
        Ok((n / g, self.den / g))
    }

    /// Number of `(t^k - α)` factors this spec contributes.
    pub fn steps(&self) -> Result<usize> {
        Ok(match self.reduced()?.1 {
            1 | 2 => 1,
            _ => 2,
        })
    }

    /// The factor in the variable `s = t^k`.
    fn factor_in_s(&self) -> Result<RatPoly> {
        let (n, m) = self.reduced()?;
        let two_cos = match m {
            1 => return Err(Error::RootAtOneForbidden),
            2 => return Ok(RatPoly::from_ints(&[1, 1])),
            3 => -1,
            4 => 0,
            6 => 1,
            _ => return Err(Error::IrrationalCoefficients { num: n, den: m }),
        };
        Ok(RatPoly::from_ints(&[1, -two_cos, 1]))
    }
}

impl fmt::Display for AlphaSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

impl FromStr for AlphaSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::ParseError {
            pos: 0,
            msg: format!("alpha must look like n/m, got {s:?}"),
        };
        let (n, m) = s.trim().split_once('/').ok_or_else(bad)?;
        let num = n.trim().parse().map_err(|_| bad())?;
        let den = m.trim().parse().map_err(|_| bad())?;
        Ok(AlphaSpec { num, den })
    }
}

/// Substitutes `s = t^k`.
fn inflate(p: &RatPoly, k: usize) -> RatPoly {
    let mut coeffs = vec![Rat::zero(); p.degree().map_or(0, |e| e * k + 1)];
    for (j, c) in p.coeffs().iter().enumerate() {
        coeffs[j * k] = c.clone();
    }
    RatPoly::new(coeffs)
}

/// Builds `c t^i ∏ (t^k - α)` over `(1 - t^k)^d`.
pub fn generate_unit_circle_family(
    k: usize,
    d: usize,
    i: usize,
    steps: &[AlphaSpec],
    c: &Rat,
) -> Result<GenFun> {
    if k == 0 || i >= k {
        return Err(Error::InvalidGenFun(format!(
            "class {i} out of range for k = {k}"
        )));
    }
    if c.is_zero() {
        return Err(Error::ZeroNumerator);
    }
    let mut in_s = RatPoly::one();
    for a in steps {
        in_s = &in_s * &a.factor_in_s()?;
    }
    let u = &RatPoly::monomial(c.clone(), i) * &inflate(&in_s, k);
    GenFun::new(u, k, d)
}
