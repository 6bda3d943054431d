//! Exact Hilbert quasipolynomials of `U(t) / (1 - t^k)^d`.
//!
//! The pipeline runs from the generating function ([`genfun`]) through its
//! closed-form constituents and their factorizations ([`quasipoly`]) to root
//! certificates ([`rootcert`]). Everything up to the final critical-line check
//! is exact over `Q`.

pub mod cli;
pub mod error;
pub mod exactalg;
pub mod genfun;
pub mod quasipoly;
pub mod rootcert;
pub mod serial;

pub use error::{Error, Result};
pub use exactalg::{Rat, RatPoly};
pub use genfun::GenFun;
pub use quasipoly::QuasiPoly;
