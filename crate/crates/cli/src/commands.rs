//! Subcommand bodies.

use std::path::PathBuf;
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;

use iwcon::algebra::{classify as classify_alg, contract as contract_alg, CaseId, Classification, Family, LieAlgebra3, LinearMap3, Rational};
use iwcon::direct_limit::{self, MatrixElementReport, MatrixThresholds};
use iwcon::reps::{commutator_residual, ContractionCase, ParamPath, ScheduleKind};
use iwcon::verify::{run_case, ConvergenceReport, ProbeSet, Schedule, Thresholds, DEFAULT_L, PROBE_MAX_M};

use crate::scaling::parse_map;
use crate::{CaseArgs, CliError, ScheduleArgs};

/// Largest commutator residual accepted for a realization at ε = 1.
pub const HOMOMORPHISM_TOL: f64 = 1e-8;

/// The intertwined operators carry up to one power of 1/ε each, so roundoff
/// in a commutator grows like ε⁻².
fn hom_tolerance(eps: f64) -> f64 {
    HOMOMORPHISM_TOL * (1.0 / (eps * eps)).max(1.0)
}

fn write_out(path: Option<&PathBuf>, text: &str) -> Result<(), CliError> {
    match path {
        Some(p) => std::fs::write(p, text).map_err(|source| CliError::Io {
            path: p.clone(),
            source,
        }),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn to_json<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("reports serialize");
    s.push('\n');
    s
}

fn parse_lambda(s: Option<&str>) -> Result<Option<Rational>, CliError> {
    s.map(|t| Rational::from_str(t).map_err(|e| CliError::Usage(e.to_string())))
        .transpose()
}

fn instance(family: &str, lambda: Option<&str>) -> Result<LieAlgebra3, CliError> {
    let fam = Family::from_str(family)?;
    if fam == Family::Custom {
        return Err(CliError::Usage("`custom` is not a catalog family".into()));
    }
    let lambda = parse_lambda(lambda)?;
    if lambda.is_some() && !fam.has_parameter() {
        return Err(CliError::Usage(format!("{fam} takes no λ")));
    }
    Ok(fam.instance(lambda.or_else(|| fam.default_lambda()))?)
}

fn relations(alg: &LieAlgebra3) -> String {
    let mut r = alg.relations();
    if r.is_empty() {
        return "all brackets vanish".into();
    }
    r.sort();
    r.join(", ")
}

#[derive(Serialize)]
struct CatalogEntry<'a> {
    name: String,
    algebra: &'a LieAlgebra3,
    relations: Vec<String>,
}

pub fn algebras(json: bool, family: Option<String>, lambda: Option<String>) -> Result<(), CliError> {
    let algs: Vec<LieAlgebra3> = match family {
        Some(f) => vec![instance(&f, lambda.as_deref())?],
        None if lambda.is_some() => return Err(CliError::Usage("--lambda needs --family".into())),
        None => Family::CATALOG.iter().map(|f| f.default_instance()).collect(),
    };
    let entries = algs
        .iter()
        .map(|a| {
            Ok(CatalogEntry {
                name: classify_alg(a)?.display_name(),
                algebra: a,
                relations: a.relations(),
            })
        })
        .collect::<Result<Vec<_>, CliError>>()?;
    if json {
        print!("{}", to_json(&entries));
    } else {
        for e in &entries {
            println!("{:<16} {}", e.name, relations(e.algebra));
        }
    }
    Ok(())
}

#[derive(Serialize)]
struct ContractOutput {
    source: String,
    limit: LieAlgebra3,
    relations: Vec<String>,
    classification: Classification,
    name: String,
}

pub fn contract(source: &str, lambda: Option<String>, map: &str, json: bool) -> Result<(), CliError> {
    let alg = instance(source, lambda.as_deref())?;
    let t = parse_map(map)?;
    let limit = match contract_alg(&alg, &t) {
        Ok(g) => g,
        Err(d) => {
            for e in &d.entries {
                eprintln!("diverges: {e}");
            }
            return Err(d.into());
        }
    };
    let c = classify_alg(&limit)?;
    if json {
        let out = ContractOutput {
            source: alg.display_name(),
            relations: limit.relations(),
            name: c.display_name(),
            limit,
            classification: c,
        };
        print!("{}", to_json(&out));
    } else {
        println!("{}; classified: {}", relations(&limit), c.display_name());
    }
    Ok(())
}

fn rational_leaf(v: &serde_json::Value) -> Result<Rational, CliError> {
    match v {
        serde_json::Value::Number(n) => n
            .as_i64()
            .map(Rational::from_int)
            .ok_or_else(|| CliError::Usage(format!("structure constant {n} is not an integer; use \"p/q\""))),
        serde_json::Value::String(s) => s.parse().map_err(|e: iwcon::algebra::rational::ParseRationalError| CliError::Usage(e.to_string())),
        other => Err(CliError::Usage(format!("expected a rational, got {other}"))),
    }
}

fn json_arg(spec: &str) -> Result<serde_json::Value, CliError> {
    let text = if spec.trim_start().starts_with('[') {
        spec.to_string()
    } else {
        std::fs::read_to_string(spec).map_err(|e| CliError::Usage(format!("cannot read `{spec}`: {e}")))?
    };
    serde_json::from_str(&text).map_err(|e| CliError::Usage(format!("bad JSON: {e}")))
}

fn array3<T>(v: &serde_json::Value, f: impl Fn(&serde_json::Value) -> Result<T, CliError>) -> Result<[T; 3], CliError> {
    let a = v
        .as_array()
        .filter(|a| a.len() == 3)
        .ok_or_else(|| CliError::Usage("expected an array of length 3".into()))?;
    Ok([f(&a[0])?, f(&a[1])?, f(&a[2])?])
}

pub fn classify(
    family: Option<String>,
    lambda: Option<String>,
    basis: Option<String>,
    structure: Option<String>,
    json: bool,
) -> Result<(), CliError> {
    let alg = match (family, structure) {
        (Some(f), None) => {
            let a = instance(&f, lambda.as_deref())?;
            match basis {
                Some(b) => {
                    let rows = array3(&json_arg(&b)?, |r| array3(r, rational_leaf))?;
                    a.change_basis(&LinearMap3 { rows })?
                }
                None => a,
            }
        }
        (None, Some(s)) => {
            let c = array3(&json_arg(&s)?, |i| array3(i, |j| array3(j, rational_leaf)))?;
            LieAlgebra3::custom(c)?
        }
        _ => return Err(CliError::Usage("give either --family or --structure".into())),
    };
    let c = classify_alg(&alg)?;
    if json {
        print!("{}", to_json(&c));
    } else {
        println!("{}", c.display_name());
        if let Some(w) = &c.witness {
            println!("witness rows: {:?}", w.rows);
        }
        if let Some(conv) = c.lambda_convention() {
            println!("convention: {conv}");
        }
    }
    Ok(())
}

/// Parameters each case reads, by flag name.
fn accepted(id: CaseId) -> &'static [&'static str] {
    match id {
        CaseId::GLambdaToH | CaseId::LLambdaToH => &["A", "lambda"],
        CaseId::EaToH | CaseId::Iso2ToH | CaseId::CToH | CaseId::Sl2ToH => &["A"],
        CaseId::CToG1 | CaseId::Sl2ToIso11 => &["a", "b"],
        CaseId::Su2ToIso2 => &["R"],
        CaseId::Sl2ToIso2 => &["r"],
    }
}

pub fn build_case(args: &CaseArgs) -> Result<ContractionCase, CliError> {
    let id = CaseId::from_str(&args.case)?;
    let given = [
        ("A", args.amp.is_some()),
        ("R", args.radius.is_some()),
        ("lambda", args.lambda.is_some()),
        ("a", args.a.is_some()),
        ("b", args.b.is_some()),
        ("r", args.r.is_some()),
    ];
    let ok = accepted(id);
    for (name, set) in given {
        if set && !ok.contains(&name) {
            return Err(CliError::Usage(format!(
                "case {id} does not take --{name} (accepted: {})",
                ok.iter().map(|n| format!("--{n}")).collect::<Vec<_>>().join(", ")
            )));
        }
    }
    let d = ParamPath::default();
    let params = ParamPath {
        amp: args.amp.unwrap_or(d.amp),
        radius: args.radius.unwrap_or(d.radius),
        lambda: parse_lambda(args.lambda.as_deref())?,
        a: args.a.unwrap_or(d.a),
        b: args.b.unwrap_or(d.b),
        r: args.r.unwrap_or(d.r),
    };
    Ok(ContractionCase::new(id, params)?)
}

pub fn build_schedule(case: &ContractionCase, s: &ScheduleArgs) -> Result<Schedule, CliError> {
    let sched = match (&s.eps, &s.l, &s.n, case.schedule_kind) {
        (None, None, None, _) => Schedule::default_for(case),
        (Some(e), _, _, ScheduleKind::Continuous) => Schedule::continuous(e.clone())?,
        (_, Some(l), _, k @ ScheduleKind::Degree { .. }) => Schedule::sequential(k, l.clone())?,
        (_, _, Some(n), k @ ScheduleKind::Kirillov { .. }) => Schedule::sequential(k, n.clone())?,
        (_, _, _, kind) => {
            let want = match kind {
                ScheduleKind::Continuous => "--eps",
                ScheduleKind::Degree { .. } => "--l",
                ScheduleKind::Kirillov { .. } => "--n",
            };
            return Err(CliError::Usage(format!("case {} takes its schedule through {want}", case.id)));
        }
    };
    sched.check_matches(case)?;
    Ok(sched)
}

#[derive(Debug, Clone, Serialize)]
pub struct HomPoint {
    pub eps: f64,
    pub residual: f64,
    pub tolerance: f64,
}

#[derive(Debug, Clone, Serialize)]
pub struct HomReport {
    pub kind: &'static str,
    pub case: CaseId,
    pub params: ParamPath,
    pub probes: Vec<String>,
    pub grid_points: usize,
    /// Tolerance for the limit representation and for the family at ε = 1.
    pub tolerance: f64,
    /// Commutator residual of the source family at each ε.
    pub family: Vec<HomPoint>,
    /// Commutator residual of the limit representation on the images `L f`.
    pub limit_residual: f64,
    pub pass: bool,
}

fn homomorphism(case: &ContractionCase, probes: &ProbeSet, eps: &[f64]) -> Result<HomReport, CliError> {
    let family = eps
        .par_iter()
        .map(|&e| {
            let rep = case.family(e)?;
            // su(2) probes live at one degree; rebuild them at each point
            let local = if case.id == CaseId::Su2ToIso2 {
                let s = Schedule {
                    kind: "degree",
                    index: case.index(e).map(|l| vec![l]),
                    eps: vec![e],
                };
                ProbeSet::default_for(case, &s)
            } else {
                probes.clone()
            };
            Ok(HomPoint {
                eps: e,
                residual: commutator_residual(&rep, &local.functions, &local.grid)?,
                tolerance: hom_tolerance(e),
            })
        })
        .collect::<Result<Vec<_>, CliError>>()?;
    let images = probes
        .functions
        .iter()
        .map(|f| case.limit_map(f, probes.eps0))
        .collect::<Result<Vec<_>, _>>()?;
    let limit_residual = commutator_residual(&case.limit_rep(), &images, &probes.grid)?;
    let pass = limit_residual <= HOMOMORPHISM_TOL && family.iter().all(|p| p.residual <= p.tolerance);
    Ok(HomReport {
        kind: "homomorphism",
        case: case.id,
        params: case.params.clone(),
        probes: probes.describe(),
        grid_points: probes.grid.len(),
        tolerance: HOMOMORPHISM_TOL,
        family,
        limit_residual,
        pass,
    })
}

pub fn verify_rep(args: &CaseArgs, eps: Option<f64>, out: Option<PathBuf>) -> Result<(), CliError> {
    let case = build_case(args)?;
    let mut sched = Schedule::default_for(&case);
    if let Some(e) = eps {
        if !(e > 0.0 && e.is_finite()) {
            return Err(CliError::Usage(format!("ε must be positive, got {e}")));
        }
        sched.index = sched.index.as_ref().and(case.index(e)).map(|i| vec![i]);
        sched.eps = vec![e];
    } else {
        sched.index = sched.index.map(|v| vec![v[0]]);
        sched.eps.truncate(1);
    }
    let probes = ProbeSet::default_for(&case, &sched);
    let rep = homomorphism(&case, &probes, &sched.eps)?;
    write_out(out.as_ref(), &to_json(&rep))?;
    if rep.pass {
        Ok(())
    } else {
        Err(CliError::Failed("commutator residual above tolerance".into()))
    }
}

#[derive(Serialize)]
struct VerifyReport {
    kind: &'static str,
    case: CaseId,
    homomorphism: HomReport,
    convergence: ConvergenceReport,
    #[serde(skip_serializing_if = "Option::is_none")]
    matrix_elements: Option<MatrixElementReport>,
    passed: bool,
}

fn summary(r: &VerifyReport) -> String {
    let c = &r.convergence;
    let mark = |b: bool| if b { "pass" } else { "FAIL" };
    let mut s = format!("{}: {}\n", r.case, if r.passed { "PASS" } else { "FAIL" });
    s += &format!("  homomorphism  {}\n", mark(r.homomorphism.pass));
    for (name, cond) in [("i", &c.conditions.i), ("ii", &c.conditions.ii), ("iii", &c.conditions.iii), ("iv", &c.conditions.iv)] {
        s += &format!("  condition {name:<3} {}\n", mark(cond.pass));
    }
    for g in &c.generators {
        s += &format!(
            "    {:<8} final sup {:.3e}  rate {}\n",
            g.name,
            g.sup_errors.last().copied().unwrap_or(0.0),
            serde_json::to_string(&g.rate).expect("rates serialize")
        );
    }
    if let Some(m) = &r.matrix_elements {
        s += &format!("  matrix elements {}\n", mark(m.passed));
    }
    s
}

pub fn verify(args: &CaseArgs, sched: &ScheduleArgs, out: Option<PathBuf>, csv: Option<PathBuf>) -> Result<(), CliError> {
    let case = build_case(args)?;
    let schedule = build_schedule(&case, sched)?;
    let probes = ProbeSet::default_for(&case, &schedule);
    let homomorphism = homomorphism(&case, &probes, &schedule.eps)?;
    let convergence = run_case(&case, &schedule, &probes, &Thresholds::default())?;
    let matrix_elements = if case.id == CaseId::Su2ToIso2 {
        Some(direct_limit::matrix_elements(&case, &schedule, PROBE_MAX_M, &MatrixThresholds::default())?)
    } else {
        None
    };
    let passed = homomorphism.pass && convergence.passed && matrix_elements.as_ref().is_none_or(|m| m.passed);
    let report = VerifyReport {
        kind: "verify",
        case: case.id,
        homomorphism,
        convergence,
        matrix_elements,
        passed,
    };
    write_out(out.as_ref(), &to_json(&report))?;
    if let Some(p) = &csv {
        write_out(Some(p), &report.convergence.to_csv())?;
    }
    if out.is_some() {
        print!("{}", summary(&report));
    } else {
        eprint!("{}", summary(&report));
    }
    if passed {
        Ok(())
    } else {
        Err(CliError::Failed(format!("{} did not pass every check", case.id)))
    }
}

pub fn sweep(args: &CaseArgs, sched: &ScheduleArgs, csv: Option<PathBuf>) -> Result<(), CliError> {
    let case = build_case(args)?;
    let schedule = build_schedule(&case, sched)?;
    let probes = ProbeSet::default_for(&case, &schedule);
    let r = run_case(&case, &schedule, &probes, &Thresholds::default())?;
    write_out(csv.as_ref(), &r.to_csv())?;
    if r.passed {
        Ok(())
    } else {
        Err(CliError::Failed(format!("{} did not pass every condition", case.id)))
    }
}

pub fn matrix_elements(
    radius: f64,
    l: Option<Vec<i64>>,
    max_m: i64,
    out: Option<PathBuf>,
    csv: Option<PathBuf>,
) -> Result<(), CliError> {
    let params = ParamPath {
        radius,
        ..ParamPath::default()
    };
    let case = ContractionCase::new(CaseId::Su2ToIso2, params)?;
    let schedule = Schedule::sequential(case.schedule_kind, l.unwrap_or_else(|| DEFAULT_L.to_vec()))?;
    if max_m < 0 {
        return Err(CliError::Usage("--max-m must be nonnegative".into()));
    }
    let r = direct_limit::matrix_elements(&case, &schedule, max_m, &MatrixThresholds::default())?;
    write_out(out.as_ref(), &to_json(&r))?;
    if let Some(p) = &csv {
        write_out(Some(p), &r.to_csv())?;
    }
    if r.passed {
        Ok(())
    } else {
        Err(CliError::Failed("matrix elements did not converge within tolerance".into()))
    }
}
