//! Buchberger's algorithm over the rationals, with the coprime-lead and
//! chain criteria, deterministic normal-strategy pair selection, resource
//! budgets, and a triangular back-solver for lexicographic bases.

mod backsolve;
mod buchberger;

pub use backsolve::{back_solve, BackSolveResult, Branch};
pub use buchberger::{
    buchberger, s_polynomial, Certificate, GroebnerBasis, GroebnerBudget, GroebnerError,
};
