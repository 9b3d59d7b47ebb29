//! Sparse multivariate polynomials and rational functions over the exact
//! rationals.
//!
//! All polynomials in one computation share a [`VariableTable`]; the table's
//! order is the lexicographic priority (earlier = more significant). The
//! default table is the 22-variable metric-entry order
//! `l, x1, y1, z1, x2, y2, z2, u1, v1, w1, u2, v2, w2, a1, b1, c1, a2, b2, c2, a3, b3, c3`
//! in which the Einstein systems are assembled and solved.

mod gcd;
mod monomial;
mod parse;
mod polynomial;
mod ratfun;
mod table;

pub use monomial::{Monomial, MonomialOrder};
pub use parse::parse_polynomial;
pub use polynomial::{divmod, reduce, Coeff, Polynomial, QuadPolynomial, ToScalar};
pub use ratfun::RationalFunction;
pub use table::VariableTable;

pub use gcd::{gcd as poly_gcd, try_exact_div};

use thiserror::Error;

/// Errors from polynomial arithmetic and parsing.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("operands use different variable tables")]
    TableMismatch,
    #[error("variable `{0}` is not in the table")]
    UnknownVariable(String),
    #[error("variable `{0}` has no assigned value")]
    MissingVariable(String),
    #[error("zero denominator in rational function")]
    ZeroDenominator,
    #[error("parse error at byte {at}: {msg}")]
    Parse { at: usize, msg: String },
    #[error("duplicate variable name `{0}`")]
    DuplicateVariable(String),
}
