//! Direct limits of directed systems of inner-product spaces over totally
//! ordered index sets, and matrix-element convergence for su(2) → iso(2).

mod matrix;
mod system;

pub use matrix::{
    compatible_bases_check, matrix_element_limit, matrix_elements, CompatibleBasesReport,
    MatrixElementReport, MatrixElementSequence, MatrixEntry, MatrixThresholds, SpanDimension,
    MATRIX_CSV_HEADER,
};
pub use system::{dl_add, dl_equal, dl_inner, dl_inner_at, dl_scale, AxiomReport, DLVector, DirectedSystem};

use crate::reps::RepError;
use crate::verify::VerifyError;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum DirectLimitError {
    #[error("index {index} is not in the system (first index {first})")]
    IndexOutOfRange { index: i64, first: i64 },
    #[error("index {index} needs {expected} coordinates, got {got}")]
    DimensionMismatch { index: i64, expected: usize, got: usize },
    #[error("cannot embed from index {from} down to {to}")]
    NotUpward { from: i64, to: i64 },
    #[error("{0}")]
    Domain(String),
    #[error(transparent)]
    Rep(#[from] RepError),
    #[error(transparent)]
    Verify(#[from] VerifyError),
}
