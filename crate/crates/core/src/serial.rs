//! Serde helpers: rationals as exact `"p/q"` strings, floats with 17
//! significant digits.

use serde::ser::{SerializeSeq, Serializer};
use serde_json::value::RawValue;

use crate::exactalg::{Rat, RatPoly};

/// `"p/q"`, or `"p"` for integers.
pub fn rat_string(r: &Rat) -> String {
    r.to_string()
}

/// Coefficients low degree first.
pub fn poly_strings(p: &RatPoly) -> Vec<String> {
    p.coeffs().iter().map(rat_string).collect()
}

/// `{:.16e}` keeps 17 significant digits and is valid JSON number syntax.
pub fn float_text(x: f64) -> String {
    if x.is_finite() {
        format!("{x:.16e}")
    } else {
        "null".to_string()
    }
}

pub fn rat<S: Serializer>(r: &Rat, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&rat_string(r))
}

pub fn poly<S: Serializer>(p: &RatPoly, s: S) -> Result<S::Ok, S::Error> {
    let mut seq = s.serialize_seq(Some(p.coeffs().len()))?;
    for c in p.coeffs() {
        seq.serialize_element(&rat_string(c))?;
    }
    seq.end()
}

pub fn polys<S: Serializer>(ps: &[RatPoly], s: S) -> Result<S::Ok, S::Error> {
    let mut seq = s.serialize_seq(Some(ps.len()))?;
    for p in ps {
        seq.serialize_element(&poly_strings(p))?;
    }
    seq.end()
}

pub fn rats<S: Serializer>(rs: &[Rat], s: S) -> Result<S::Ok, S::Error> {
    let mut seq = s.serialize_seq(Some(rs.len()))?;
    for r in rs {
        seq.serialize_element(&rat_string(r))?;
    }
    seq.end()
}

pub fn float<S: Serializer>(x: &f64, s: S) -> Result<S::Ok, S::Error> {
    let raw = RawValue::from_string(float_text(*x)).map_err(serde::ser::Error::custom)?;
    serde::Serialize::serialize(&raw, s)
}
