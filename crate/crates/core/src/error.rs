use thiserror::Error;

/// Errors produced by the exact pipeline, the root certifiers and the CLI.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("division by the zero polynomial")]
    ZeroDivisor,

    #[error("invalid generating function: {0}")]
    InvalidGenFun(String),

    #[error("need at least {needed} series terms, got {got}")]
    NotEnoughSamples { needed: usize, got: usize },

    #[error("exponent {j} outside 0..={max}")]
    ExponentOutOfRange { j: usize, max: usize },

    #[error("numerator class {0} is empty")]
    EmptyClass(usize),

    #[error("theorem violation: {0}")]
    TheoremViolation(String),

    #[error("root finding did not converge after {iterations} iterations")]
    RootFindingDiverged {
        iterations: usize,
        /// Best iterate as (re, im) pairs.
        best: Vec<(f64, f64)>,
    },

    #[error("alpha = 1 is forbidden: the class would vanish at t = 1")]
    RootAtOneForbidden,

    #[error("root of unity e^(2 pi i {num}/{den}) has irrational 2cos; only orders 1, 2, 3, 4, 6 keep coefficients rational")]
    IrrationalCoefficients { num: i64, den: i64 },

    #[error("parse error at position {pos}: {msg}")]
    ParseError { pos: usize, msg: String },

    #[error("numerator is the zero polynomial")]
    ZeroNumerator,

    #[error("usage: {0}")]
    Usage(String),
}

pub type Result<T> = std::result::Result<T, Error>;
