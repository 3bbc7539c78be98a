//! Associated Legendre functions, spherical harmonics and Bessel functions.

pub mod bessel;
pub mod legendre;
pub mod sph_harm;

pub use bessel::{bessel_j, bessel_j_derivative};
pub use legendre::assoc_legendre;
pub use sph_harm::{i_power, sph_harm, SphHarmConvention, CONVENTION};

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum SpecialError {
    #[error("domain error: {0}")]
    Domain(String),
    #[error("singular point: {0}")]
    Singular(String),
}
