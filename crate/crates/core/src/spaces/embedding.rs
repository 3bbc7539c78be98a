//! Isometric embeddings between members of a space family.

use std::sync::Arc;

use serde::Serialize;

use super::functions::{Func, Support, ZeroExtended};
use super::harmonics::DeformedHarmonic;
use super::SpaceError;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Embedding {
    Identity,
    /// Extension by zero from a smaller interval to a larger one.
    ZeroExtension { from: (f64, f64), to: (f64, f64) },
    /// `χ_{l,ε}^m ↦ χ_{l',ε'}^m`.
    BasisIndexMap { to_l: i64, to_eps: f64 },
}

/// Tolerance on jet coefficients when checking that a function with
/// undeclared support vanishes to all computed orders at an endpoint.
const FLAT_TOL: f64 = 1e-12;
const FLAT_ORDER: usize = 4;

fn flat_at(f: &Func, x: f64) -> Result<bool, SpaceError> {
    let j = f.jet([x, 0.0], FLAT_ORDER)?;
    Ok((0..=FLAT_ORDER).all(|k| j.coeff(k, 0).norm() <= FLAT_TOL))
}

pub fn embed(f: &Func, e: &Embedding) -> Result<Func, SpaceError> {
    match *e {
        Embedding::Identity => Ok(f.clone()),
        Embedding::ZeroExtension { from, to } => {
            if from.0 < to.0 || from.1 > to.1 {
                return Err(SpaceError::InvalidDomain(format!(
                    "[{}, {}] is not inside [{}, {}]",
                    from.0, from.1, to.0, to.1
                )));
            }
            let inside = match f.support() {
                Support::Bounded { lo, hi } => lo[0] >= from.0 && hi[0] <= from.1,
                Support::Unbounded => false,
            };
            if !inside && !(flat_at(f, from.0)? && flat_at(f, from.1)?) {
                return Err(SpaceError::BoundaryClassViolation(format!(
                    "{} does not vanish to all orders at the ends of [{}, {}]",
                    f.describe(),
                    from.0,
                    from.1
                )));
            }
            Ok(Arc::new(ZeroExtended {
                inner: f.clone(),
                from,
            }))
        }
        Embedding::BasisIndexMap { to_l, to_eps } => {
            let h = f.as_harmonic().ok_or(SpaceError::NotABasisVector)?;
            if h.m.abs() > to_l {
                return Err(SpaceError::InvalidDomain(format!(
                    "m = {} does not fit in degree {to_l}",
                    h.m
                )));
            }
            Ok(DeformedHarmonic::new(to_l, h.m, to_eps).into_func())
        }
    }
}
