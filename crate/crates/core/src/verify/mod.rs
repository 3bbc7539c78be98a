//! Convergence verification of contractions of representations: the limit
//! map, inner-product preservation and pointwise and L² convergence of the
//! scaled generators, with fitted rates.

mod checks;
mod fit;
mod run;
mod schedule;

pub use checks::{condition_iii_check, sph_to_bessel_check};
pub use fit::{rate_fit, Rate};
pub use run::{
    run_case, Condition, Conditions, ConvergenceReport, GeneratorReport, Thresholds, CSV_HEADER,
};
pub use schedule::{
    ProbeSet, Schedule, DEFAULT_EPS, DEFAULT_L, DEFAULT_N, GRID_POINTS, PROBE_MAX_M, SU2_THETA_MAX,
};

use crate::jet::EvalError;
use crate::reps::RepError;
use crate::spaces::SpaceError;
use crate::special::SpecialError;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum VerifyError {
    #[error("schedule does not match the case: {0}")]
    ScheduleMismatch(String),
    #[error("invalid schedule: {0}")]
    InvalidSchedule(String),
    #[error("degenerate fit: {0}")]
    DegenerateFit(String),
    #[error("{0}")]
    Domain(String),
    #[error(transparent)]
    Rep(#[from] RepError),
    #[error(transparent)]
    Space(#[from] SpaceError),
    #[error(transparent)]
    Eval(#[from] EvalError),
    #[error(transparent)]
    Special(#[from] SpecialError),
}
