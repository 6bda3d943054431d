//! Numerator syntax.
//!
//! Two forms are accepted:
//! - a coefficient list, low degree first: `"1,0,-1/2"`
//! - terms in `t`: `"1 + 2t^3 - 1/2t^5"`, optionally with `*` between
//!   coefficient and `t`
//!
//! Whitespace is ignored in both. Error positions are character offsets into
//! the original text.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exactalg::{Rat, RatPoly};

const MAX_EXPONENT: usize = 1 << 16;

pub fn parse_numerator(text: &str) -> Result<RatPoly> {
    let chars: Vec<(usize, char)> = text
        .chars()
        .enumerate()
        .filter(|(_, c)| !c.is_whitespace())
        .collect();
    if chars.is_empty() {
        return Err(Error::ParseError {
            pos: 0,
            msg: "empty numerator".into(),
        });
    }
    let len = text.chars().count();
    let poly = if chars.iter().any(|(_, c)| matches!(c, 't' | 'T')) {
        Terms {
            s: &chars,
            at: 0,
            len,
        }
        .parse()?
    } else {
        parse_list(&chars, len)?
    };
    if poly.is_zero() {
        return Err(Error::ZeroNumerator);
    }
    Ok(poly)
}

/// Inverse of [`parse_numerator`] for the list form.
pub fn serialize_numerator(p: &RatPoly) -> String {
    if p.is_zero() {
        return "0".into();
    }
    p.coeffs()
        .iter()
        .map(|c| c.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

fn parse_list(chars: &[(usize, char)], len: usize) -> Result<RatPoly> {
    let mut coeffs = Vec::new();
    let mut start = 0;
    for end in 0..=chars.len() {
        let at_comma = chars.get(end).is_some_and(|p| p.1 == ',');
        if end < chars.len() && !at_comma {
            continue;
        }
        // an empty field reports the position of whatever terminated it
        let end_pos = chars.get(end).map_or(len, |p| p.0);
        let mut t = Terms {
            s: &chars[start..end],
            at: 0,
            len: end_pos,
        };
        start = end + 1;
        let neg = t.eat('-');
        if !neg {
            t.eat('+');
        }
        let Some(r) = t.rational()? else {
            return t.err("expected a number");
        };
        if let Some(&(p, c)) = t.peek() {
            return Err(Error::ParseError {
                pos: p,
                msg: format!("unexpected {c:?} in coefficient"),
            });
        }
        coeffs.push(if neg { -r } else { r });
    }
    Ok(RatPoly::new(coeffs))
}

struct Terms<'a> {
    s: &'a [(usize, char)],
    at: usize,
    /// Position reported when input runs out.
    len: usize,
}

impl Terms<'_> {
    fn peek(&self) -> Option<&(usize, char)> {
        self.s.get(self.at)
    }

    fn pos(&self) -> usize {
        self.peek().map_or(self.len, |p| p.0)
    }

    fn eat(&mut self, want: char) -> bool {
        if self.peek().is_some_and(|p| p.1 == want) {
            self.at += 1;
            true
        } else {
            false
        }
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::ParseError {
            pos: self.pos(),
            msg: msg.into(),
        })
    }

    fn digits(&mut self) -> Option<BigInt> {
        let start = self.at;
        while self.peek().is_some_and(|p| p.1.is_ascii_digit()) {
            self.at += 1;
        }
        if self.at == start {
            return None;
        }
        let s: String = self.s[start..self.at].iter().map(|p| p.1).collect();
        s.parse().ok()
    }

    /// `int` or `int/int`; `None` if no digits are present.
    fn rational(&mut self) -> Result<Option<Rat>> {
        let Some(n) = self.digits() else {
            return Ok(None);
        };
        if !self.eat('/') {
            return Ok(Some(Rat::from_integer(n)));
        }
        let pos = self.pos();
        match self.digits() {
            Some(d) if d.is_zero() => Err(Error::ParseError {
                pos,
                msg: "zero denominator".into(),
            }),
            Some(d) => Ok(Some(Rat::new(n, d))),
            None => self.err("expected denominator"),
        }
    }

    fn exponent(&mut self) -> Result<usize> {
        if !self.eat('^') {
            return Ok(1);
        }
        let pos = self.pos();
        match self.digits() {
            Some(e) => usize::try_from(e)
                .ok()
                .filter(|&e| e <= MAX_EXPONENT)
                .ok_or_else(|| Error::ParseError {
                    pos,
                    msg: format!("exponent exceeds {MAX_EXPONENT}"),
                }),
            None => self.err("expected exponent after '^'"),
        }
    }

    fn parse(mut self) -> Result<RatPoly> {
        let mut terms: BTreeMap<usize, Rat> = BTreeMap::new();
        let mut first = true;
        while self.peek().is_some() {
            let neg = self.eat('-');
            if !neg && !self.eat('+') && !first {
                return self.err("expected '+' or '-'");
            }
            first = false;
            let coeff = self.rational()?;
            let had_star = self.eat('*');
            let has_t = self.eat('t') || self.eat('T');
            if had_star && !has_t {
                return self.err("expected 't' after '*'");
            }
            let (c, j) = match (coeff, has_t) {
                (None, false) => return self.err("expected a term"),
                (Some(c), false) => (c, 0),
                (c, true) => (c.unwrap_or_else(Rat::one), self.exponent()?),
            };
            let c = if neg { -c } else { c };
            *terms.entry(j).or_insert_with(Rat::zero) += c;
        }
        let Some(&top) = terms.keys().next_back() else {
            return self.err("expected a term");
        };
        let mut coeffs = vec![Rat::zero(); top + 1];
        for (j, c) in terms {
            coeffs[j] = c;
        }
        Ok(RatPoly::new(coeffs))
    }
}
