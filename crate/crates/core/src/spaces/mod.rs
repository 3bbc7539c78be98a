//! Domains, measures, quadrature, test functions and embeddings.

mod embedding;
mod functions;
mod harmonics;
mod quadrature;

pub use embedding::{embed, Embedding};
pub use functions::{bump, bump2, AnalyticFn, Func, LinComb, Support, TestFunction, ZeroExtended};
pub use harmonics::{BesselMode, DeformedHarmonic};
pub use quadrature::{
    gauss_legendre_16, gram_matrix, inner_product, midpoint_grid, norm, quadrature, DEFAULT_PANELS,
};

use serde::Serialize;

use crate::jet::EvalError;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum SpaceError {
    #[error("integration over an unbounded domain needs a declared compact support")]
    UnboundedSupport,
    #[error("zero extension would break smoothness: {0}")]
    BoundaryClassViolation(String),
    #[error("basis-index embedding applies only to deformed spherical harmonics")]
    NotABasisVector,
    #[error("invalid domain: {0}")]
    InvalidDomain(String),
    #[error(transparent)]
    Eval(#[from] EvalError),
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Domain {
    RealLine,
    /// `(0, ∞)`.
    HalfLine,
    Interval { a: f64, b: f64 },
    /// `[0, π/ε) × [0, 2π)` in `(θ, φ)`.
    DeformedDisc { eps: f64 },
    /// The plane in polar coordinates `(r, φ)`, `r > 0`.
    Polar,
}

impl Domain {
    pub fn interval(a: f64, b: f64) -> Result<Self, SpaceError> {
        if a < b {
            Ok(Domain::Interval { a, b })
        } else {
            Err(SpaceError::InvalidDomain(format!("[{a}, {b}] is empty")))
        }
    }

    pub fn deformed_disc(eps: f64) -> Result<Self, SpaceError> {
        if eps > 0.0 {
            Ok(Domain::DeformedDisc { eps })
        } else {
            Err(SpaceError::InvalidDomain(format!("ε = {eps} must be positive")))
        }
    }

    pub fn dim(&self) -> usize {
        match self {
            Domain::DeformedDisc { .. } | Domain::Polar => 2,
            _ => 1,
        }
    }

    /// Coordinate box `[lo, hi]` covered by the domain (infinite where unbounded).
    pub fn bounds(&self) -> ([f64; 2], [f64; 2]) {
        let tau = 2.0 * std::f64::consts::PI;
        match *self {
            Domain::RealLine => ([f64::NEG_INFINITY, 0.0], [f64::INFINITY, 0.0]),
            Domain::HalfLine => ([0.0, 0.0], [f64::INFINITY, 0.0]),
            Domain::Interval { a, b } => ([a, 0.0], [b, 0.0]),
            Domain::DeformedDisc { eps } => ([0.0, 0.0], [std::f64::consts::PI / eps, tau]),
            Domain::Polar => ([0.0, 0.0], [f64::INFINITY, tau]),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Measure {
    Lebesgue,
    /// `dx / x`.
    InverseX,
    /// `(2l+1) ε sin(εθ) / 4π dθ dφ` on the deformed disc.
    DeformedSphere { l: i64, eps: f64 },
    /// `r dr dφ`.
    PolarArea,
}

impl Measure {
    pub fn weight(&self, p: [f64; 2]) -> f64 {
        match *self {
            Measure::Lebesgue => 1.0,
            Measure::InverseX => 1.0 / p[0],
            Measure::DeformedSphere { l, eps } => {
                (2 * l + 1) as f64 * eps * (eps * p[0]).sin() / (4.0 * std::f64::consts::PI)
            }
            Measure::PolarArea => p[0],
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum BoundaryClass {
    None,
    /// Smooth functions whose derivatives of every order vanish at the endpoints.
    AllDerivativesVanishAtEndpoints,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct FunctionSpace {
    pub domain: Domain,
    pub measure: Measure,
    pub boundary_class: BoundaryClass,
}

impl FunctionSpace {
    pub fn new(domain: Domain, measure: Measure) -> Self {
        FunctionSpace {
            domain,
            measure,
            boundary_class: BoundaryClass::None,
        }
    }

    pub fn l2_real_line() -> Self {
        Self::new(Domain::RealLine, Measure::Lebesgue)
    }

    /// `L₀^{2,∞}([a, b])`.
    pub fn vanishing_interval(a: f64, b: f64) -> Result<Self, SpaceError> {
        Ok(FunctionSpace {
            domain: Domain::interval(a, b)?,
            measure: Measure::Lebesgue,
            boundary_class: BoundaryClass::AllDerivativesVanishAtEndpoints,
        })
    }

    pub fn half_line_dx_over_x() -> Self {
        Self::new(Domain::HalfLine, Measure::InverseX)
    }

    /// `H_{(l,ε)}` carrying the rescaled sphere measure.
    pub fn deformed_sphere(l: i64, eps: f64) -> Result<Self, SpaceError> {
        Ok(Self::new(Domain::deformed_disc(eps)?, Measure::DeformedSphere { l, eps }))
    }

    pub fn polar_plane() -> Self {
        Self::new(Domain::Polar, Measure::PolarArea)
    }
}
