//! Exact scalar arithmetic: arbitrary-precision rationals and the real
//! quadratic field Q(sqrt(d)).
//!
//! Everything downstream (curvature tensors, signatures, solution
//! verification) is certificate-grade only because the scalars here never
//! round. There is no floating point anywhere in this crate.

mod quad;
mod rational;

pub use quad::{QSqrt2, QSqrt3, Quad, Sign};
pub use rational::{
    format_rational, parse_rational, rational_sqrt, Rational,
};

use thiserror::Error;

/// Errors from exact scalar arithmetic.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExactError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("malformed rational literal `{0}`")]
    BadRationalLiteral(String),
}
