//! Schedules of ε values and probe sets.

use serde::Serialize;

use crate::algebra::CaseId;
use crate::reps::{ContractionCase, ScheduleKind};
use crate::spaces::{bump, midpoint_grid, DeformedHarmonic, Func};

use super::VerifyError;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Schedule {
    /// `continuous`, `degree` (ε = R/l) or `kirillov` (ε = 4b/n²).
    pub kind: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub index: Option<Vec<i64>>,
    pub eps: Vec<f64>,
}

pub const DEFAULT_EPS: [f64; 4] = [1e-1, 1e-2, 1e-3, 1e-4];
pub const DEFAULT_L: [i64; 5] = [10, 20, 50, 100, 200];
pub const DEFAULT_N: [i64; 5] = [4, 8, 16, 32, 64];

impl Schedule {
    pub fn continuous(eps: Vec<f64>) -> Result<Self, VerifyError> {
        if eps.len() < 3 {
            return Err(VerifyError::InvalidSchedule("need at least 3 points".into()));
        }
        if eps.iter().any(|&e| !(e > 0.0 && e <= 1.0)) {
            return Err(VerifyError::InvalidSchedule("ε must lie in (0, 1]".into()));
        }
        if eps.windows(2).any(|w| w[1] >= w[0]) {
            return Err(VerifyError::InvalidSchedule("ε must be strictly decreasing".into()));
        }
        Ok(Schedule {
            kind: "continuous",
            index: None,
            eps,
        })
    }

    pub fn sequential(kind: ScheduleKind, index: Vec<i64>) -> Result<Self, VerifyError> {
        if index.len() < 3 {
            return Err(VerifyError::InvalidSchedule("need at least 3 points".into()));
        }
        if index.iter().any(|&i| i < 1) || index.windows(2).any(|w| w[1] <= w[0]) {
            return Err(VerifyError::InvalidSchedule(
                "indices must be positive and strictly increasing".into(),
            ));
        }
        let name = match kind {
            ScheduleKind::Degree { .. } => "degree",
            ScheduleKind::Kirillov { .. } => "kirillov",
            ScheduleKind::Continuous => {
                return Err(VerifyError::ScheduleMismatch(
                    "a continuous case takes a list of ε, not indices".into(),
                ))
            }
        };
        let eps = index.iter().map(|&i| kind.eps_of(i)).collect();
        Ok(Schedule {
            kind: name,
            index: Some(index),
            eps,
        })
    }

    pub fn default_for(case: &ContractionCase) -> Self {
        match case.schedule_kind {
            ScheduleKind::Continuous => Self::continuous(DEFAULT_EPS.to_vec()),
            k @ ScheduleKind::Degree { .. } => Self::sequential(k, DEFAULT_L.to_vec()),
            k @ ScheduleKind::Kirillov { .. } => Self::sequential(k, DEFAULT_N.to_vec()),
        }
        .expect("default schedules are valid")
    }

    pub fn check_matches(&self, case: &ContractionCase) -> Result<(), VerifyError> {
        let want = match case.schedule_kind {
            ScheduleKind::Continuous => "continuous",
            ScheduleKind::Degree { .. } => "degree",
            ScheduleKind::Kirillov { .. } => "kirillov",
        };
        if self.kind != want {
            return Err(VerifyError::ScheduleMismatch(format!(
                "case {} needs a {want} schedule, got {}",
                case.id, self.kind
            )));
        }
        if let (Some(idx), ScheduleKind::Degree { .. }) = (&self.index, case.schedule_kind) {
            if idx.iter().any(|&l| l < PROBE_MAX_M) {
                return Err(VerifyError::InvalidSchedule(format!(
                    "degrees must be at least {PROBE_MAX_M} to hold the probes"
                )));
            }
        }
        Ok(())
    }

    pub fn len(&self) -> usize {
        self.eps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.eps.is_empty()
    }
}

/// Test functions in `V_{ε₀}` with the points at which errors are sampled.
#[derive(Clone)]
pub struct ProbeSet {
    pub functions: Vec<Func>,
    pub grid: Vec<[f64; 2]>,
    /// Schedule point the probes live at.
    pub eps0: f64,
}

impl std::fmt::Debug for ProbeSet {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("ProbeSet")
            .field("functions", &self.describe())
            .field("grid_points", &self.grid.len())
            .field("eps0", &self.eps0)
            .finish()
    }
}

/// Largest |m| among the default harmonic probes.
pub const PROBE_MAX_M: i64 = 3;
/// Points per axis of the default grids.
pub const GRID_POINTS: usize = 200;
/// The harmonic probes are sampled on `θ ∈ (0, SU2_THETA_MAX)`.
pub const SU2_THETA_MAX: f64 = 1.0;

fn line(a: f64, b: f64) -> Vec<[f64; 2]> {
    midpoint_grid(a, b, GRID_POINTS).into_iter().map(|x| [x, 0.0]).collect()
}

impl ProbeSet {
    pub fn describe(&self) -> Vec<String> {
        self.functions.iter().map(|f| f.describe()).collect()
    }

    /// Three bumps per function-space case; `χ^m`, `|m| ≤ 3`, for su(2).
    pub fn default_for(case: &ContractionCase, schedule: &Schedule) -> Self {
        let eps0 = schedule.eps[0];
        match case.id {
            CaseId::Su2ToIso2 => {
                let l0 = case.index(eps0).unwrap_or(PROBE_MAX_M);
                let functions = (-PROBE_MAX_M..=PROBE_MAX_M)
                    .map(|m| DeformedHarmonic::new(l0, m, eps0).into_func())
                    .collect();
                let mut grid = Vec::new();
                for t in midpoint_grid(0.0, SU2_THETA_MAX, 20) {
                    for p in midpoint_grid(0.0, 2.0 * std::f64::consts::PI, 10) {
                        grid.push([t, p]);
                    }
                }
                ProbeSet { functions, grid, eps0 }
            }
            CaseId::Sl2ToIso11 => ProbeSet {
                functions: vec![bump(2.0, 1.5), bump(3.0, 2.0), bump(3.5, 2.5)],
                grid: line(0.5, 6.0),
                eps0,
            },
            _ => ProbeSet {
                functions: vec![bump(0.0, 1.0), bump(0.5, 1.5), bump(-1.0, 0.75)],
                grid: line(-2.0, 2.0),
                eps0,
            },
        }
    }
}
