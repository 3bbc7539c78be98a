//! The four-condition protocol for one contraction case.

use num_complex::Complex64;
use rayon::prelude::*;
use serde::Serialize;

use crate::algebra::CaseId;
use crate::reps::{
    apply, combine, iso2_ladder, su2_ladder, ContractionCase, DiffOp, Ladder, ParamPath,
};
use crate::spaces::{
    embed, gram_matrix, quadrature, BesselMode, DeformedHarmonic, Func, Support, DEFAULT_PANELS,
};

use super::checks::condition_iii_check;
use super::fit::{rate_fit, Rate};
use super::schedule::{ProbeSet, Schedule};
use super::VerifyError;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Thresholds {
    /// Largest sup error allowed at the last schedule point.
    pub sup_final: f64,
    pub min_rate: f64,
    pub min_r2: f64,
    /// Errors at or below this count as zero.
    pub exact: f64,
    /// Tolerance on inner-product preservation.
    pub inner_product: f64,
    /// Tolerance on the gap between an operator and its ladder expansion.
    pub ladder: f64,
}

impl Default for Thresholds {
    fn default() -> Self {
        Thresholds {
            sup_final: 1e-3,
            min_rate: 0.8,
            min_r2: 0.98,
            exact: 1e-10,
            inner_product: 1e-10,
            ladder: 1e-8,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct GeneratorReport {
    pub name: String,
    pub sup_errors: Vec<f64>,
    pub l2_errors: Vec<f64>,
    /// Fit of the sup errors against ε.
    pub rate: Rate,
    pub l2_rate: Rate,
    pub monotone: bool,
    pub pass: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct Condition {
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub residual: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub residuals: Option<Vec<f64>>,
    pub note: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct Conditions {
    pub i: Condition,
    pub ii: Condition,
    pub iii: Condition,
    pub iv: Condition,
}

#[derive(Debug, Clone, Serialize)]
pub struct ConvergenceReport {
    pub kind: &'static str,
    pub case: CaseId,
    pub params: ParamPath,
    pub schedule: Schedule,
    pub embedding: &'static str,
    pub probes: Vec<String>,
    pub grid_points: usize,
    /// For the harmonic case: largest gap on the grid between the scaled
    /// operator applied to a probe and its ladder expansion.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub ladder_residual: Option<f64>,
    pub generators: Vec<GeneratorReport>,
    pub conditions: Conditions,
    pub thresholds: Thresholds,
    pub passed: bool,
}

struct PointResult {
    sup: [f64; 3],
    l2: [f64; 3],
    limit_residual: f64,
    ip_residual: f64,
    ladder_residual: f64,
}

fn sup_on_grid(u: &Func, v: &Func, grid: &[[f64; 2]]) -> Result<f64, VerifyError> {
    let mut worst: f64 = 0.0;
    for &p in grid {
        worst = worst.max((u.value(p)? - v.value(p)?).norm());
    }
    Ok(worst)
}

fn l2_distance(case: &ContractionCase, u: &Func, v: &Func) -> Result<f64, VerifyError> {
    let space = case.target_space();
    let support: Support = u.support().hull(&v.support());
    let q = quadrature(
        &space,
        |p| Ok(Complex64::new((u.value(p)? - v.value(p)?).norm_sqr(), 0.0)),
        &support,
        DEFAULT_PANELS,
    )?;
    Ok(q.re.max(0.0).sqrt())
}

/// `L(ρ_l(t Y) χ^m) − η(ψY) B_{−m}` as coefficients on the `B_s`, using
/// `L χ^{m'} = B_{−m'}`, together with the ladder expansion of `ρ_l(t Y) χ^m`.
fn su2_difference(
    case: &ContractionCase,
    k: usize,
    eps: f64,
    m: i64,
) -> Result<(Ladder, Ladder), VerifyError> {
    let l = case.index(eps).expect("degree schedule");
    let ty = case.scaled_coordinates(k, eps);
    let py = case.limit_coordinates(k);
    let src = combine(&[
        (ty[0], su2_ladder(l, m, 0)?),
        (ty[1], su2_ladder(l, m, 1)?),
        (ty[2], su2_ladder(l, m, 2)?),
    ]);
    let r = case.params.radius;
    let tgt = combine(&[
        (py[0], iso2_ladder(r, -m, 0)?),
        (py[1], iso2_ladder(r, -m, 1)?),
        (py[2], iso2_ladder(r, -m, 2)?),
    ]);
    let mut diff = Ladder::new();
    for (s, c) in &src {
        *diff.entry(-s).or_insert(Complex64::new(0.0, 0.0)) += c;
    }
    for (s, d) in &tgt {
        *diff.entry(*s).or_insert(Complex64::new(0.0, 0.0)) -= d;
    }
    Ok((diff, src))
}

/// Pointwise and norm errors of one harmonic probe, and the largest gap
/// between the operator and its ladder expansion on the grid.
fn su2_errors(
    case: &ContractionCase,
    op: &DiffOp,
    k: usize,
    eps: f64,
    chi: &Func,
    grid: &[[f64; 2]],
) -> Result<(f64, f64, f64), VerifyError> {
    let h = *chi.as_harmonic().expect("harmonic probe");
    let (diff, src) = su2_difference(case, k, eps, h.m)?;
    let r = case.params.radius;
    let modes: Vec<(Complex64, Func)> = diff
        .iter()
        .map(|(&s, &c)| (c, BesselMode::new(r, s).into_func()))
        .collect();
    let terms: Vec<(Complex64, Func)> = src
        .iter()
        .map(|(&mp, &c)| (c, DeformedHarmonic::new(h.l, mp, h.eps).into_func()))
        .collect();
    let u = apply(op, chi);
    let mut sup: f64 = 0.0;
    let mut ladder: f64 = 0.0;
    for &p in grid {
        let mut e = Complex64::new(0.0, 0.0);
        for (c, b) in &modes {
            e += c * b.value(p)?;
        }
        sup = sup.max(e.norm());
        let mut x = Complex64::new(0.0, 0.0);
        for (c, f) in &terms {
            x += c * f.value(p)?;
        }
        ladder = ladder.max((u.value(p)? - x).norm());
    }
    let l2 = diff.values().map(|c| c.norm_sqr()).sum::<f64>().sqrt();
    Ok((sup, l2, ladder))
}

fn eval_point(
    case: &ContractionCase,
    probes: &ProbeSet,
    limits: &[Func],
    targets: &[DiffOp; 3],
    gram0: &[Vec<Complex64>],
    eps: f64,
) -> Result<PointResult, VerifyError> {
    let emb = case.embedding(probes.eps0, eps);
    let lifted = probes
        .functions
        .iter()
        .map(|f| embed(f, &emb))
        .collect::<Result<Vec<_>, _>>()?;
    let mut limit_residual: f64 = 0.0;
    for (f, lf) in lifted.iter().zip(limits) {
        limit_residual = limit_residual.max(sup_on_grid(f, lf, &probes.grid)?);
    }
    let su2 = case.id == CaseId::Su2ToIso2;
    let mut sup = [0.0; 3];
    let mut l2 = [0.0; 3];
    let mut ladder_residual: f64 = 0.0;
    for k in 0..3 {
        let op = case.scaled_generator(k, eps)?;
        for (f, lf) in lifted.iter().zip(limits) {
            let (es, e2) = if su2 {
                let (es, e2, lad) = su2_errors(case, &op, k, eps, f, &probes.grid)?;
                ladder_residual = ladder_residual.max(lad);
                (es, e2)
            } else {
                let u = apply(&op, f);
                let v = apply(&targets[k], lf);
                (sup_on_grid(&u, &v, &probes.grid)?, l2_distance(case, &u, &v)?)
            };
            sup[k] = f64::max(sup[k], es);
            l2[k] = f64::max(l2[k], e2);
        }
    }
    // inner products survive the embedding (the harmonic case is checked at ε₀ only)
    let mut ip_residual: f64 = 0.0;
    if !su2 {
        let g = gram_matrix(&lifted, &case.space(eps)?, DEFAULT_PANELS)?;
        for (row, row0) in g.iter().zip(gram0) {
            for (a, b) in row.iter().zip(row0) {
                ip_residual = ip_residual.max((a - b).norm());
            }
        }
    }
    Ok(PointResult {
        sup,
        l2,
        limit_residual,
        ip_residual,
        ladder_residual,
    })
}

fn monotone(e: &[f64], tol: f64) -> bool {
    e.windows(2).all(|w| w[1] <= w[0] + tol)
}

fn fit(eps: &[f64], e: &[f64], exact: f64) -> Result<Rate, VerifyError> {
    if e.iter().all(|&v| v <= exact) {
        return Ok(Rate::Exact);
    }
    let pts: Vec<(f64, f64)> = eps.iter().copied().zip(e.iter().copied()).collect();
    rate_fit(&pts)
}

fn converges(rate: &Rate, mono: bool, t: &Thresholds) -> bool {
    match *rate {
        Rate::Exact => true,
        Rate::Fit { p, r2, .. } => mono && p >= t.min_rate && r2 >= t.min_r2,
    }
}

/// Runs every schedule point (in parallel on the current rayon pool) and
/// assembles the report in schedule order.
pub fn run_case(
    case: &ContractionCase,
    schedule: &Schedule,
    probes: &ProbeSet,
    thresholds: &Thresholds,
) -> Result<ConvergenceReport, VerifyError> {
    schedule.check_matches(case)?;
    if probes.eps0 != schedule.eps[0] {
        return Err(VerifyError::ScheduleMismatch(
            "probes must live at the first schedule point".into(),
        ));
    }
    let limits = probes
        .functions
        .iter()
        .map(|f| case.limit_map(f, probes.eps0))
        .collect::<Result<Vec<_>, _>>()?;
    let targets = [case.limit_generator(0), case.limit_generator(1), case.limit_generator(2)];
    let su2 = case.id == CaseId::Su2ToIso2;
    let gram0 = if su2 {
        Vec::new()
    } else {
        gram_matrix(&probes.functions, &case.space(probes.eps0)?, DEFAULT_PANELS)?
    };
    let points = schedule
        .eps
        .par_iter()
        .map(|&eps| eval_point(case, probes, &limits, &targets, &gram0, eps))
        .collect::<Result<Vec<_>, _>>()?;

    let t = thresholds;
    let names = case.generator_names();
    let mut generators = Vec::new();
    for k in 0..3 {
        let sup: Vec<f64> = points.iter().map(|p| p.sup[k]).collect();
        let l2: Vec<f64> = points.iter().map(|p| p.l2[k]).collect();
        let rate = fit(&schedule.eps, &sup, t.exact)?;
        let l2_rate = fit(&schedule.eps, &l2, t.exact)?;
        let mono = rate == Rate::Exact || monotone(&sup, t.exact);
        let l2_mono = l2_rate == Rate::Exact || monotone(&l2, t.exact);
        let last = *sup.last().expect("nonempty schedule");
        let sup_ok = rate == Rate::Exact || (last <= t.sup_final && converges(&rate, mono, t));
        let pass = sup_ok && converges(&l2_rate, l2_mono, t);
        generators.push(GeneratorReport {
            name: names[k].clone(),
            sup_errors: sup,
            l2_errors: l2,
            rate,
            l2_rate,
            monotone: mono && l2_mono,
            pass,
        });
    }

    let lim: Vec<f64> = points.iter().map(|p| p.limit_residual).collect();
    let lim_rate = fit(&schedule.eps, &lim, t.exact)?;
    let i = Condition {
        pass: converges(&lim_rate, monotone(&lim, t.exact), t),
        residual: lim.last().copied(),
        residuals: Some(lim),
        note: format!(
            "sup over the grid of |phi(f) - L(f)| per schedule point; {} embeddings",
            case.embedding_kind()
        ),
    };

    let mut hit = true;
    for lf in &limits {
        let mut peak: f64 = 0.0;
        for &p in &probes.grid {
            peak = peak.max(lf.value(p)?.norm());
        }
        hit &= peak > 0.0;
    }
    let ii = Condition {
        pass: hit,
        residual: None,
        residuals: None,
        note: "checked on the probe set only: every L(f) is defined and nonzero".into(),
    };

    let base = condition_iii_check(case, probes)?;
    let along = points.iter().map(|p| p.ip_residual).fold(0.0, f64::max);
    let iii_res = base.max(along);
    let iii = Condition {
        pass: iii_res <= t.inner_product,
        residual: Some(iii_res),
        residuals: None,
        note: if su2 {
            "max |<L f, L g> - <f, g>| over probe pairs at the first degree".into()
        } else {
            "max |<L f, L g> - <f, g>| and |<phi f, phi g> - <f, g>| over probe pairs".into()
        },
    };

    let ladder_residual =
        su2.then(|| points.iter().map(|p| p.ladder_residual).fold(0.0, f64::max));
    let iv_pass = generators.iter().all(|g| g.pass) && ladder_residual.is_none_or(|r| r <= t.ladder);
    let iv = Condition {
        pass: iv_pass,
        residual: Some(generators.iter().map(|g| *g.sup_errors.last().unwrap()).fold(0.0, f64::max)),
        residuals: None,
        note: "final sup error within threshold and fitted rates, or exact, for every generator".into(),
    };
    let passed = i.pass && ii.pass && iii.pass && iv.pass;
    Ok(ConvergenceReport {
        kind: "convergence",
        case: case.id,
        params: case.params.clone(),
        schedule: schedule.clone(),
        embedding: case.embedding_kind(),
        probes: probes.describe(),
        grid_points: probes.grid.len(),
        ladder_residual,
        generators,
        conditions: Conditions { i, ii, iii, iv },
        thresholds: thresholds.clone(),
        passed,
    })
}

pub const CSV_HEADER: &str = "case,generator,index,eps,sup_error,l2_error";

impl ConvergenceReport {
    /// One row per (generator, ε), sorted by generator name then by decreasing ε.
    pub fn to_csv(&self) -> String {
        let mut out = String::from(CSV_HEADER);
        out.push('\n');
        let mut order: Vec<usize> = (0..self.schedule.eps.len()).collect();
        order.sort_by(|&a, &b| self.schedule.eps[b].total_cmp(&self.schedule.eps[a]));
        let mut gens: Vec<&GeneratorReport> = self.generators.iter().collect();
        gens.sort_by(|a, b| a.name.cmp(&b.name));
        for g in gens {
            for &j in &order {
                let idx = self
                    .schedule
                    .index
                    .as_ref()
                    .map(|v| v[j].to_string())
                    .unwrap_or_default();
                out.push_str(&format!(
                    "{},{},{},{},{},{}\n",
                    self.case, g.name, idx, self.schedule.eps[j], g.sup_errors[j], g.l2_errors[j]
                ));
            }
        }
        out
    }
}
