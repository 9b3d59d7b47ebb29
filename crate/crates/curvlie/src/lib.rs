//! Exact classification toolkit for left-invariant Einstein metrics on
//! SL(2,R) x SL(2,R) that are bi-invariant under a one-parameter subgroup.
//!
//! The crate is organized in layers:
//!
//! - [`exact`] — big rationals and the quadratic field Q(sqrt(3)), with
//!   exact sign decisions.
//! - [`poly`] — sparse multivariate polynomials and rational functions over
//!   the rationals, with lexicographic monomial ordering.
//! - [`groebner`] — Buchberger's algorithm with the standard pair criteria,
//!   ideal membership, and a triangular back-solver for lex bases.
//! - [`liealg`] — Lie algebras given by structure constants: sl(2,R), direct
//!   sums, Killing forms, adjoint matrices, canonical forms.
//! - [`curvature`] — connection coefficients, Riemann/Ricci tensors, the
//!   covariant derivative of curvature, signatures, and pullbacks, both for
//!   exact numeric metrics and for parametric polynomial metrics.
//! - [`einstein`] — the classification pipeline: invariant metric ansatz per
//!   one-parameter-subgroup generator, Einstein system assembly, Groebner
//!   solving, and the exactly verified solution catalog.
//!
//! The `curvlie` CLI in this workspace exposes the pipeline; see the book
//! under `book/` for a guided tour.

pub mod curvature;
pub mod einstein;
pub mod exact;
pub mod groebner;
pub mod liealg;
pub mod matrix;
pub mod poly;

#[cfg(doctest)]
mod book;
