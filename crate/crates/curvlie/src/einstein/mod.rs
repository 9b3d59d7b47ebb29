//! The classification pipeline for left-invariant Einstein metrics on
//! SL(2,R) x SL(2,R) that are bi-invariant under a one-parameter subgroup:
//!
//! 1. a catalog of subgroup generators up to automorphism ([`GeneratorCase`]),
//! 2. the invariant metric ansatz per generator ([`case_ansatz`],
//!    [`invariant_tensor_space`]),
//! 3. assembly of the Einstein equations `Ric = lambda g` with the volume
//!    normalization `det(g) = +-1` as a polynomial system
//!    ([`assemble_einstein_system`]),
//! 4. a lexicographic Groebner basis plus triangular back-solving
//!    ([`solve_case`]),
//! 5. exact verification and classification of the solutions against the
//!    known catalog: the Killing-form metric and the nearly pseudo-Kaehler
//!    metric ([`known_solution_catalog`], [`verify_instance`],
//!    [`orbit_reduction_witness`]).

mod ansatz;
mod assemble;
mod cases;
mod catalog;
mod orbit;
mod records;
mod solve;
mod verify;

pub use ansatz::{case_ansatz, invariant_tensor_space, q_block_ansatz, QRepresentative};
pub use assemble::{assemble_einstein_system, EinsteinSystem};
pub use cases::{generator_catalog, AnsatzPattern, GeneratorCase, GeneratorFamily};
pub use catalog::{
    catalog_samples, eighth_killing, g1, g2, isometry_witness_a, known_solution_catalog,
    t1_matrix, t2_matrix, CatalogEntry, CatalogMetric, FamilyMetric, SampledInstance,
};
pub use orbit::{check_isometry_candidate, check_so21, orbit_reduction_witness, OrbitWitness};
pub use records::{solution_to_json, SolutionRecord};
pub use solve::{solve_case, CaseSolution, ResidualBranch};
pub use verify::{
    negate_metric, verify_einstein_exact, verify_family_symbolic, verify_instance, InstanceCheck,
};

use thiserror::Error;

#[derive(Debug, Error)]
pub enum EinsteinError {
    #[error("unknown generator case `{0}`")]
    BadCase(String),
    #[error("bad case parameter: {0}")]
    BadParameter(String),
    #[error(transparent)]
    Curvature(#[from] crate::curvature::CurvatureError),
    #[error(transparent)]
    Poly(#[from] crate::poly::PolyError),
    #[error(transparent)]
    Groebner(#[from] crate::groebner::GroebnerError),
    #[error("family instantiation left the field: {0}")]
    OutsideField(String),
}
