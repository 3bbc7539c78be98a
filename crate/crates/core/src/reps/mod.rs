//! Representations by differential operators and the ten contraction cases.

mod cases;
mod diffop;
mod ladder;
pub mod realizations;

pub use cases::{realize, ContractionCase, ParamPath, ScheduleKind};
pub use diffop::{apply, commutator_residual, Coeff, DiffOp, RepRealization, Term};
pub use ladder::{combine, iso2_ladder, su2_ladder, Ladder};

use crate::algebra::AlgebraError;
use crate::jet::EvalError;
use crate::spaces::SpaceError;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum RepError {
    #[error("unknown case `{0}`")]
    UnknownCase(String),
    #[error("invalid parameter: {0}")]
    InvalidParam(String),
    #[error("{0}")]
    Domain(String),
    #[error(transparent)]
    Eval(#[from] EvalError),
    #[error(transparent)]
    Space(#[from] SpaceError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}
