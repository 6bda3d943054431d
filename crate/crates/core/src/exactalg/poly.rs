//! Dense univariate polynomials over `Q`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Exact rational. `BigRational` keeps itself reduced with a positive denominator.
pub type Rat = BigRational;

/// Builds the rational `num/den`.
///
/// Panics if `den == 0`.
pub fn rat(num: i64, den: i64) -> Rat {
    Rat::new(BigInt::from(num), BigInt::from(den))
}

pub fn int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// A polynomial with exact rational coefficients, lowest degree first.
///
/// The coefficient vector never ends in a zero; the zero polynomial is the
/// empty vector and has no degree.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct RatPoly {
    coeffs: Vec<Rat>,
}

impl RatPoly {
    pub fn new(mut coeffs: Vec<Rat>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        RatPoly { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| int(c)).collect())
    }

    pub fn zero() -> Self {
        RatPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rat::one())
    }

    pub fn constant(c: Rat) -> Self {
        Self::new(vec![c])
    }

    /// `c * x^j`.
    pub fn monomial(c: Rat, j: usize) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![Rat::zero(); j + 1];
        coeffs[j] = c;
        RatPoly { coeffs }
    }

    /// The monic linear polynomial `x + a`.
    pub fn linear(a: Rat) -> Self {
        Self::new(vec![a, Rat::one()])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    /// Coefficient of `x^j`, zero beyond the degree.
    pub fn coeff(&self, j: usize) -> Rat {
        self.coeffs.get(j).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn leading(&self) -> Option<&Rat> {
        self.coeffs.last()
    }

    /// Index of the lowest nonzero coefficient, i.e. the exponent of the
    /// largest power of `x` dividing `self`.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn eval(&self, x: &Rat) -> Rat {
        self.coeffs
            .iter()
            .rev()
            .fold(Rat::zero(), |acc, c| acc * x + c)
    }

    pub fn scale(&self, s: &Rat) -> Self {
        if s.is_zero() {
            return Self::zero();
        }
        RatPoly {
            coeffs: self.coeffs.iter().map(|c| c * s).collect(),
        }
    }

    pub fn monic(&self) -> Self {
        match self.leading() {
            Some(lc) => self.scale(&lc.recip()),
            None => Self::zero(),
        }
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(j, c)| c * int(j as i64))
                .collect(),
        )
    }

    /// Divides `self` by `x^s`; the caller guarantees `s <= valuation`.
    pub fn shift_down(&self, s: usize) -> Self {
        Self::new(self.coeffs.iter().skip(s).cloned().collect())
    }

    /// Euclidean division over `Q`: `self = q * divisor + r`, `deg r < deg divisor`.
    pub fn divrem(&self, divisor: &RatPoly) -> Result<(RatPoly, RatPoly)> {
        let db = divisor.degree().ok_or(Error::ZeroDivisor)?;
        let lc_inv = divisor.coeffs[db].recip();
        let mut rem = self.coeffs.clone();
        let Some(da) = self.degree() else {
            return Ok((Self::zero(), Self::zero()));
        };
        if da < db {
            return Ok((Self::zero(), self.clone()));
        }
        let mut quot = vec![Rat::zero(); da - db + 1];
        for shift in (0..=da - db).rev() {
            let c = &rem[shift + db] * &lc_inv;
            if c.is_zero() {
                continue;
            }
            for (j, b) in divisor.coeffs.iter().enumerate() {
                rem[shift + j] -= &c * b;
            }
            quot[shift] = c;
        }
        rem.truncate(db);
        Ok((Self::new(quot), Self::new(rem)))
    }

    /// Monic greatest common divisor; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &RatPoly) -> RatPoly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            // b is nonzero, so divrem cannot fail
            let (_, r) = a.divrem(&b).expect("nonzero divisor");
            a = b;
            b = r;
        }
        a.monic()
    }

    /// `self / gcd(self, self')`, made monic. Same roots, all simple.
    pub fn square_free(&self) -> Result<RatPoly> {
        if self.is_zero() {
            return Err(Error::ZeroDivisor);
        }
        let g = self.gcd(&self.derivative());
        let (q, _) = self.divrem(&g)?;
        Ok(q.monic())
    }

    /// Returns `p(x + s)`, computed by repeated synthetic division.
    pub fn shift(&self, s: &Rat) -> RatPoly {
        let mut c = self.coeffs.clone();
        let n = c.len();
        for i in 0..n {
            for j in (i..n - 1).rev() {
                let t = &c[j + 1] * s;
                c[j] += t;
            }
        }
        Self::new(c)
    }

    /// Returns `p(-x)`.
    pub fn reflect(&self) -> RatPoly {
        RatPoly {
            coeffs: self
                .coeffs
                .iter()
                .enumerate()
                .map(|(j, c)| if j % 2 == 1 { -c } else { c.clone() })
                .collect(),
        }
    }

    pub fn pow(&self, e: u32) -> RatPoly {
        (0..e).fold(Self::one(), |acc, _| &acc * self)
    }

    /// `∏ (x + a)` over the given shifts.
    pub fn from_linear_factors<'a>(shifts: impl IntoIterator<Item = &'a Rat>) -> RatPoly {
        shifts
            .into_iter()
            .fold(Self::one(), |acc, a| &acc * &Self::linear(a.clone()))
    }

    pub fn to_f64(&self) -> Vec<f64> {
        self.coeffs.iter().map(rat_to_f64).collect()
    }
}

pub fn rat_to_f64(r: &Rat) -> f64 {
    use num_traits::ToPrimitive;
    r.to_f64().unwrap_or_else(|| {
        // numerator/denominator overflow f64 individually; scale them down together
        let bits = r.numer().bits().max(r.denom().bits()) as i64 - 900;
        let shift = bits.max(0) as usize;
        let n = (r.numer() >> shift).to_f64().unwrap_or(f64::NAN);
        let d = (r.denom() >> shift).to_f64().unwrap_or(f64::NAN);
        n / d
    })
}

pub fn poly_add(a: &RatPoly, b: &RatPoly) -> RatPoly {
    a + b
}

pub fn poly_mul(a: &RatPoly, b: &RatPoly) -> RatPoly {
    a * b
}

pub fn poly_divrem(a: &RatPoly, b: &RatPoly) -> Result<(RatPoly, RatPoly)> {
    a.divrem(b)
}

pub fn poly_shift(p: &RatPoly, s: &Rat) -> RatPoly {
    p.shift(s)
}

impl Add for &RatPoly {
    type Output = RatPoly;
    fn add(self, rhs: &RatPoly) -> RatPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        RatPoly::new((0..n).map(|j| self.coeff(j) + rhs.coeff(j)).collect())
    }
}

impl Sub for &RatPoly {
    type Output = RatPoly;
    fn sub(self, rhs: &RatPoly) -> RatPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        RatPoly::new((0..n).map(|j| self.coeff(j) - rhs.coeff(j)).collect())
    }
}

impl Neg for &RatPoly {
    type Output = RatPoly;
    fn neg(self) -> RatPoly {
        RatPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Mul for &RatPoly {
    type Output = RatPoly;
    fn mul(self, rhs: &RatPoly) -> RatPoly {
        if self.is_zero() || rhs.is_zero() {
            return RatPoly::zero();
        }
        let mut out = vec![Rat::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        RatPoly::new(out)
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for RatPoly {
            type Output = RatPoly;
            fn $m(self, rhs: RatPoly) -> RatPoly {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl fmt::Debug for RatPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RatPoly({self})")
    }
}

/// Human-readable form in the variable `n`, highest degree first.
impl fmt::Display for RatPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (j, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if c.is_negative() { '-' } else { '+' })?;
            }
            first = false;
            let show_coeff = j == 0 || !mag.is_one();
            if show_coeff {
                if mag.is_integer() || j == 0 {
                    write!(f, "{mag}")?;
                } else {
                    write!(f, "({mag})")?;
                }
            }
            match j {
                0 => {}
                1 => write!(f, "n")?,
                _ => write!(f, "n^{j}")?,
            }
        }
        Ok(())
    }
}
