//! Matrix elements of the scaled su(2) generators in the harmonic bases and
//! their limits in the Bessel basis.

use num_complex::Complex64;
use serde::Serialize;

use crate::algebra::CaseId;
use crate::reps::{combine, iso2_ladder, su2_ladder, ContractionCase, Ladder, ParamPath};
use crate::spaces::{embed, DeformedHarmonic};
use crate::verify::{rate_fit, Rate, Schedule};

use super::system::DirectedSystem;
use super::DirectLimitError;

/// `⟨χ_l^m, ρ_l(t Y) χ_l^s⟩` along a degree schedule and its limit.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct MatrixElementSequence {
    pub generator: String,
    pub m: i64,
    pub s: i64,
    pub values: Vec<(i64, Complex64)>,
    /// `⟨B_{−m}, η(ψY) B_{−s}⟩`.
    pub target: Complex64,
}

fn require_su2(case: &ContractionCase) -> Result<(), DirectLimitError> {
    if case.id == CaseId::Su2ToIso2 {
        Ok(())
    } else {
        Err(DirectLimitError::Domain(format!(
            "matrix elements are defined for su2-to-iso2, not {}",
            case.id
        )))
    }
}

fn entry(ladder: &Ladder, at: i64) -> Complex64 {
    ladder.get(&at).copied().unwrap_or_default()
}

/// Computed from the ladder coefficients and orthonormality of the bases.
pub fn matrix_element_limit(
    case: &ContractionCase,
    m: i64,
    s: i64,
    generator: usize,
    l_schedule: &[i64],
) -> Result<MatrixElementSequence, DirectLimitError> {
    require_su2(case)?;
    if generator >= 3 {
        return Err(DirectLimitError::Domain(format!("generator index {generator} out of range")));
    }
    let lmin = l_schedule
        .iter()
        .copied()
        .min()
        .ok_or_else(|| DirectLimitError::Domain("empty degree schedule".into()))?;
    if m.abs() > lmin || s.abs() > lmin {
        return Err(DirectLimitError::Domain(format!(
            "need |m|, |s| ≤ {lmin}, got m = {m}, s = {s}"
        )));
    }
    let kind = case.schedule_kind;
    let mut values = Vec::with_capacity(l_schedule.len());
    for &l in l_schedule {
        let ty = case.scaled_coordinates(generator, kind.eps_of(l));
        let action = combine(&[
            (ty[0], su2_ladder(l, s, 0)?),
            (ty[1], su2_ladder(l, s, 1)?),
            (ty[2], su2_ladder(l, s, 2)?),
        ]);
        values.push((l, entry(&action, m)));
    }
    let py = case.limit_coordinates(generator);
    let r = case.params.radius;
    let limit = combine(&[
        (py[0], iso2_ladder(r, -s, 0)?),
        (py[1], iso2_ladder(r, -s, 1)?),
        (py[2], iso2_ladder(r, -s, 2)?),
    ]);
    Ok(MatrixElementSequence {
        generator: case.generator_names()[generator].clone(),
        m,
        s,
        values,
        target: entry(&limit, -m),
    })
}

/// An entry passes when it is exact, or when its errors decrease and the
/// last one is within `final_error`. Rates are reported, not gated: entries
/// with `|m| = 3` carry an `O(1/l²)` term that bends the fit at small `l`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct MatrixThresholds {
    /// Largest error allowed at the last degree.
    pub final_error: f64,
    /// Errors at or below this count as zero.
    pub exact: f64,
}

impl Default for MatrixThresholds {
    fn default() -> Self {
        MatrixThresholds {
            final_error: 3e-3,
            exact: 1e-12,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct MatrixEntry {
    pub generator: String,
    pub m: i64,
    pub s: i64,
    pub values: Vec<Complex64>,
    pub target: Complex64,
    pub errors: Vec<f64>,
    /// Fit of the errors against ε = R/l.
    pub rate: Rate,
    /// The same fit over the last three degrees.
    pub tail_rate: Rate,
    pub pass: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct MatrixElementReport {
    pub kind: &'static str,
    pub case: CaseId,
    pub params: ParamPath,
    pub schedule: Schedule,
    pub max_m: i64,
    pub entries: Vec<MatrixEntry>,
    pub thresholds: MatrixThresholds,
    pub passed: bool,
}

/// Every matrix element with `|m|, |s| ≤ max_m` for the three generators.
pub fn matrix_elements(
    case: &ContractionCase,
    schedule: &Schedule,
    max_m: i64,
    thresholds: &MatrixThresholds,
) -> Result<MatrixElementReport, DirectLimitError> {
    require_su2(case)?;
    schedule.check_matches(case)?;
    let ls = schedule.index.clone().expect("degree schedules carry indices");
    let mut entries = Vec::new();
    for k in 0..3 {
        for m in -max_m..=max_m {
            for s in -max_m..=max_m {
                let seq = matrix_element_limit(case, m, s, k, &ls)?;
                let errors: Vec<f64> = seq.values.iter().map(|(_, v)| (v - seq.target).norm()).collect();
                let exact = errors.iter().all(|&e| e <= thresholds.exact);
                let pts: Vec<(f64, f64)> = schedule.eps.iter().copied().zip(errors.iter().copied()).collect();
                let (rate, tail_rate) = if exact {
                    (Rate::Exact, Rate::Exact)
                } else {
                    (rate_fit(&pts)?, rate_fit(&pts[pts.len().saturating_sub(3)..])?)
                };
                let pass = exact
                    || (errors.windows(2).all(|w| w[1] <= w[0])
                        && *errors.last().expect("nonempty") <= thresholds.final_error);
                entries.push(MatrixEntry {
                    generator: seq.generator,
                    m,
                    s,
                    values: seq.values.into_iter().map(|(_, v)| v).collect(),
                    target: seq.target,
                    errors,
                    rate,
                    tail_rate,
                    pass,
                });
            }
        }
    }
    let passed = entries.iter().all(|e| e.pass);
    Ok(MatrixElementReport {
        kind: "matrix-elements",
        case: case.id,
        params: case.params.clone(),
        schedule: schedule.clone(),
        max_m,
        entries,
        thresholds: thresholds.clone(),
        passed,
    })
}

pub const MATRIX_CSV_HEADER: &str = "case,generator,m,s,index,eps,re,im,target_re,target_im,error";

impl MatrixElementReport {
    /// One row per (generator, m, s, l), sorted by generator name, m, s and
    /// decreasing ε.
    pub fn to_csv(&self) -> String {
        let mut out = String::from(MATRIX_CSV_HEADER);
        out.push('\n');
        let mut entries: Vec<&MatrixEntry> = self.entries.iter().collect();
        entries.sort_by(|a, b| (&a.generator, a.m, a.s).cmp(&(&b.generator, b.m, b.s)));
        let idx = self.schedule.index.as_deref().unwrap_or_default();
        let mut order: Vec<usize> = (0..self.schedule.eps.len()).collect();
        order.sort_by(|&a, &b| self.schedule.eps[b].total_cmp(&self.schedule.eps[a]));
        for e in entries {
            for &j in &order {
                let v = e.values[j];
                out.push_str(&format!(
                    "{},{},{},{},{},{},{},{},{},{},{}\n",
                    self.case,
                    e.generator,
                    e.m,
                    e.s,
                    idx.get(j).map(|i| i.to_string()).unwrap_or_default(),
                    self.schedule.eps[j],
                    v.re,
                    v.im,
                    e.target.re,
                    e.target.im,
                    e.errors[j]
                ));
            }
        }
        out
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SpanDimension {
    pub generator: String,
    /// Largest number of basis vectors in `ρ_l(t Y) χ_l^m` over the schedule.
    pub max_dim: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CompatibleBasesReport {
    pub case: CaseId,
    /// Whether the case comes with a basis family carried along by the embeddings.
    pub declared: bool,
    /// `φ_ij(χ_i^m) = χ_j^m` for all consecutive degrees and `|m| ≤ i`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub index_map: Option<bool>,
    /// Directed-system axioms of the coordinate system up to the last degree.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub axioms: Option<bool>,
    pub spans: Vec<SpanDimension>,
    pub passed: bool,
    pub note: String,
}

/// Only su2-to-iso2 declares a compatible basis family; every other case is
/// reported as lacking one rather than searched for.
pub fn compatible_bases_check(
    case: &ContractionCase,
    l_schedule: &[i64],
) -> Result<CompatibleBasesReport, DirectLimitError> {
    if case.id != CaseId::Su2ToIso2 {
        let note = if case.id == CaseId::Iso2ToH {
            "no compatible basis family is declared: Hermite functions do not lie in the limit space"
        } else {
            "no compatible basis family is declared for this case"
        };
        return Ok(CompatibleBasesReport {
            case: case.id,
            declared: false,
            index_map: None,
            axioms: None,
            spans: Vec::new(),
            passed: false,
            note: note.into(),
        });
    }
    if l_schedule.is_empty() || l_schedule.iter().any(|&l| l < 0) || l_schedule.windows(2).any(|w| w[1] <= w[0]) {
        return Err(DirectLimitError::Domain(
            "degrees must be nonnegative and strictly increasing".into(),
        ));
    }
    let kind = case.schedule_kind;
    let eps = |l: i64| kind.eps_of(l.max(1));
    let mut index_map = true;
    for w in l_schedule.windows(2) {
        let (i, j) = (w[0], w[1]);
        let emb = case.embedding(eps(i), eps(j));
        for m in -i..=i {
            let f = DeformedHarmonic::new(i, m, eps(i)).into_func();
            let g = embed(&f, &emb).map_err(crate::reps::RepError::from)?;
            index_map &= g.as_harmonic() == Some(&DeformedHarmonic::new(j, m, eps(j)));
        }
    }
    let last = *l_schedule.last().expect("nonempty");
    let axioms = DirectedSystem::su2_harmonics().check_axioms(last.min(8))?.holds();
    let names = case.generator_names();
    let mut spans = Vec::new();
    for (k, name) in names.iter().enumerate() {
        let mut max_dim = 0;
        for &l in l_schedule {
            let ty = case.scaled_coordinates(k, eps(l));
            for m in -l..=l {
                let action = combine(&[
                    (ty[0], su2_ladder(l, m, 0)?),
                    (ty[1], su2_ladder(l, m, 1)?),
                    (ty[2], su2_ladder(l, m, 2)?),
                ]);
                max_dim = max_dim.max(action.len());
            }
        }
        spans.push(SpanDimension {
            generator: name.clone(),
            max_dim,
        });
    }
    let passed = index_map && axioms && spans.iter().all(|s| s.max_dim <= 2);
    Ok(CompatibleBasesReport {
        case: case.id,
        declared: true,
        index_map: Some(index_map),
        axioms: Some(axioms),
        spans,
        passed,
        note: "harmonic bases chi_l^m, embedded by keeping m".into(),
    })
}
