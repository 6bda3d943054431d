//! Sturm sequences for exact real-root counting.

use std::cmp::Ordering;

use num_traits::{Signed, Zero};

use super::poly::{Rat, RatPoly};
use crate::error::Result;

/// An endpoint of a counting interval.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Bound {
    NegInf,
    Finite(Rat),
    PosInf,
}

/// Sturm chain `p0, p1 = p0', p_{j+1} = -rem(p_{j-1}, p_j)` of the square-free
/// part of a polynomial.
#[derive(Debug, Clone, PartialEq)]
pub struct SturmChain {
    chain: Vec<RatPoly>,
}

impl SturmChain {
    /// Builds the chain of the square-free part of `p`.
    pub fn new(p: &RatPoly) -> Result<Self> {
        let p0 = p.square_free()?;
        let mut chain = vec![p0.clone()];
        let p1 = p0.derivative();
        if p1.is_zero() {
            return Ok(SturmChain { chain });
        }
        chain.push(p1);
        loop {
            let n = chain.len();
            let (_, r) = chain[n - 2].divrem(&chain[n - 1])?;
            if r.is_zero() {
                break;
            }
            chain.push(-&r);
        }
        Ok(SturmChain { chain })
    }

    pub fn polys(&self) -> &[RatPoly] {
        &self.chain
    }

    /// The square-free polynomial whose roots this chain counts.
    pub fn base(&self) -> &RatPoly {
        &self.chain[0]
    }

    fn sign_at(p: &RatPoly, at: &Bound) -> Ordering {
        let Some(deg) = p.degree() else {
            return Ordering::Equal;
        };
        let lc = p.leading().expect("nonzero");
        match at {
            Bound::Finite(x) => p.eval(x).cmp(&Rat::zero()),
            Bound::PosInf => lc.cmp(&Rat::zero()),
            Bound::NegInf => {
                let s = lc.cmp(&Rat::zero());
                if deg % 2 == 1 {
                    s.reverse()
                } else {
                    s
                }
            }
        }
    }

    /// Sign changes along the chain at `at`, zeros dropped.
    pub fn variations(&self, at: &Bound) -> usize {
        let signs: Vec<Ordering> = self
            .chain
            .iter()
            .map(|p| Self::sign_at(p, at))
            .filter(|s| *s != Ordering::Equal)
            .collect();
        signs.windows(2).filter(|w| w[0] != w[1]).count()
    }

    /// Number of distinct real roots in the half-open interval `(lo, hi]`.
    ///
    /// The base polynomial is square-free, so dropping zeros from the sign
    /// sequence makes `V(lo) - V(hi)` count exactly the roots in `(lo, hi]`
    /// even when an endpoint is itself a root.
    pub fn count_real_roots(&self, lo: &Bound, hi: &Bound) -> usize {
        if !bound_lt(lo, hi) {
            return 0;
        }
        self.variations(lo).saturating_sub(self.variations(hi))
    }

    /// Distinct real roots in the closed ray `[lo, +inf)`.
    pub fn count_at_or_above(&self, lo: &Rat) -> usize {
        let at = usize::from(self.base().eval(lo).is_zero());
        at + self.count_real_roots(&Bound::Finite(lo.clone()), &Bound::PosInf)
    }

    /// Total number of distinct real roots.
    pub fn count_all(&self) -> usize {
        self.count_real_roots(&Bound::NegInf, &Bound::PosInf)
    }
}

fn bound_lt(a: &Bound, b: &Bound) -> bool {
    match (a, b) {
        (Bound::NegInf, Bound::NegInf) | (Bound::PosInf, _) => false,
        (Bound::NegInf, _) | (_, Bound::PosInf) => true,
        (_, Bound::NegInf) => false,
        (Bound::Finite(x), Bound::Finite(y)) => x < y,
    }
}

pub fn sturm_chain(p: &RatPoly) -> Result<SturmChain> {
    SturmChain::new(p)
}

pub fn count_real_roots(c: &SturmChain, lo: &Bound, hi: &Bound) -> usize {
    c.count_real_roots(lo, hi)
}

/// Sign of a rational as -1, 0, 1.
pub fn signum(r: &Rat) -> i32 {
    if r.is_positive() {
        1
    } else if r.is_negative() {
        -1
    } else {
        0
    }
}
