//! Curvature of left-invariant metrics from structure constants.
//!
//! In a left-invariant frame `F_1..F_n` with `[F_i,F_j] = c^k_{ij} F_k`, a
//! metric is just a symmetric matrix `g_{ij}`, and at the neutral element
//!
//! ```text
//! omega^k_{ij} = 1/2 (-g_{il} g^{mk} c^l_{jm} - g_{jl} g^{mk} c^l_{im} + c^k_{ij})
//! R^l_{ijk}    = omega^m_{jk} omega^l_{im} - omega^m_{ik} omega^l_{jm} - c^m_{ij} omega^l_{mk}
//! Ric_{ij}     = R^l_{lij}
//! ```
//!
//! The same formulas run in two modes: over an exact field (rationals or a
//! quadratic extension) for verifying concrete metrics, and over polynomials
//! for a parametric ansatz, where every denominator is a power of `det(g)`
//! and only numerators are stored.

mod numeric;
mod signature;
mod symbolic;

pub use numeric::{cov_deriv_riemann, curvature, pullback_curvature, pullback_symmetric, Curvature};
pub use signature::signature_index;
pub use symbolic::{MetricAnsatz, SymbolicCurvature};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CurvatureError {
    #[error("metric is singular")]
    SingularMetric,
    #[error("transformation matrix is singular")]
    SingularMatrix,
    #[error("metric matrix is not symmetric")]
    NotSymmetric,
    #[error("dimension mismatch: metric is {metric}x{metric}, algebra is {algebra}-dimensional")]
    Dimension { metric: usize, algebra: usize },
}
