//! Exact univariate polynomial arithmetic over `Q` and Sturm sequences.

mod poly;
mod sturm;

pub use poly::{int, poly_add, poly_divrem, poly_mul, poly_shift, rat, rat_to_f64, Rat, RatPoly};
pub use sturm::{count_real_roots, signum, sturm_chain, Bound, SturmChain};
