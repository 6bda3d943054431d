//! Root location: numeric root finding, the unit-circle hypothesis,
//! critical-line certificates and unit-circle test families.

mod certify;
mod family;
mod roots;
mod suite;
mod unit_circle;

pub use certify::{
    certify_critical_line, certify_critical_line_exact, certify_critical_line_numeric,
    not_applicable, roots_on_line_exact, verify_trivial_roots, LineStatus, Method, RootCertificate,
    DEFAULT_TOL,
};
pub use family::{generate_unit_circle_family, AlphaSpec};
pub use roots::{find_roots, monic_residual, ComplexRoot};
pub use suite::{verify_theorem_suite, ClassResult, GlobalCheck, GlobalStatus, SuiteReport};
pub use unit_circle::{check_unit_circle, is_self_inversive, UnitCircleReport};
