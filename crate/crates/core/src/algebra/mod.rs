//! Exact structure-constant algebra of 3-dimensional real Lie algebras.

pub mod classify;
pub mod graph;
pub mod laurent;
pub mod lie;
pub mod linear;
pub mod rational;
pub mod scaling;

pub use classify::{classify, Classification};
pub use graph::{contraction_graph, edge, CaseId, ContractionEdge};
pub use laurent::{LaurentMonomial, LaurentPoly};
pub use lie::{bracket, catalog, jacobi_residual, verify_isomorphism, Family, LieAlgebra3};
pub use linear::{LinearMap3, Vec3};
pub use rational::Rational;
pub use scaling::{contract, DivergenceError, DivergentEntry, ScalingMap};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum AlgebraError {
    #[error("Jacobi identity fails (residual {residual})")]
    NotALieAlgebra { residual: Rational },
    #[error("structure constants are not antisymmetric at ({i}, {j})")]
    NotAntisymmetric { i: usize, j: usize },
    #[error("map is singular")]
    SingularMap,
    #[error("scaling map determinant is not a single Laurent monomial")]
    NonMonomialDeterminant,
    #[error("map is not a homomorphism (residual {residual})")]
    NotAHomomorphism { residual: Rational },
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("unknown family `{0}`")]
    UnknownFamily(String),
    #[error("unknown case `{0}`")]
    UnknownCase(String),
    #[error("invariant {0} is irrational; no rational catalog parameter")]
    IrrationalInvariant(String),
    #[error(transparent)]
    Divergence(#[from] DivergenceError),
}
