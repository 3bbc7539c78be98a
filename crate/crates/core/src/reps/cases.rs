//! The ten contraction cases: parameter paths, the intertwined source
//! family, the limit representation, embeddings and the limit map `L`.

use std::collections::BTreeMap;
use std::f64::consts::PI;

use serde::Serialize;

use crate::algebra::linear::vec_to_f64;
use crate::algebra::{edge, CaseId, ContractionEdge, Rational};
use crate::spaces::{embed, BesselMode, Embedding, Func, FunctionSpace, SpaceError};

use super::diffop::{DiffOp, RepRealization};
use super::realizations::*;
use super::RepError;

/// Case parameters. Each case reads only the fields it needs; the
/// ε-dependent scalars are derived in [`ParamPath::scalars`].
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ParamPath {
    /// `A` in the cases contracting to h.
    #[serde(rename = "A")]
    pub amp: f64,
    /// `R` in `ε_l = R/l`.
    #[serde(rename = "R")]
    pub radius: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lambda: Option<Rational>,
    /// `a` of the g(1) target, or the sign `±1` of the Kirillov model.
    pub a: f64,
    /// `b` of the g(1) target, or `b` in `ε_n = 4b/n²`.
    pub b: f64,
    /// `r₂` of the iso(2) target reached from sl₂(ℝ).
    pub r: f64,
}

impl Default for ParamPath {
    fn default() -> Self {
        ParamPath {
            amp: 1.0,
            radius: 1.0,
            lambda: None,
            a: 1.0,
            b: 1.0,
            r: 1.0,
        }
    }
}

/// How ε is indexed.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ScheduleKind {
    /// ε ranges over `(0, 1]`.
    Continuous,
    /// `ε_l = R/l` for integer degrees `l`.
    Degree { radius: f64 },
    /// `ε_n = 4b/n²` for integer `n`.
    Kirillov { b: f64 },
}

impl ScheduleKind {
    pub fn eps_of(&self, index: i64) -> f64 {
        match *self {
            ScheduleKind::Continuous => index as f64,
            ScheduleKind::Degree { radius } => radius / index as f64,
            ScheduleKind::Kirillov { b } => 4.0 * b / (index * index) as f64,
        }
    }

    /// Inverse of [`Self::eps_of`] for the sequential kinds.
    pub fn index_of(&self, eps: f64) -> Option<i64> {
        match *self {
            ScheduleKind::Continuous => None,
            ScheduleKind::Degree { radius } => Some((radius / eps).round() as i64),
            ScheduleKind::Kirillov { b } => Some((4.0 * b / eps).sqrt().round() as i64),
        }
    }
}

fn finite_nonzero(name: &str, v: f64) -> Result<(), RepError> {
    if v.is_finite() && v != 0.0 {
        Ok(())
    } else {
        Err(RepError::InvalidParam(format!("{name} must be finite and nonzero, got {v}")))
    }
}

#[derive(Debug, Clone)]
pub struct ContractionCase {
    pub id: CaseId,
    pub edge: ContractionEdge,
    pub params: ParamPath,
    pub schedule_kind: ScheduleKind,
}

impl ContractionCase {
    pub fn new(id: CaseId, mut params: ParamPath) -> Result<Self, RepError> {
        if params.lambda.is_none() {
            params.lambda = id.default_lambda();
        }
        let edge = edge(id, params.lambda.clone()).map_err(|e| RepError::InvalidParam(e.to_string()))?;
        let schedule_kind = match id {
            CaseId::Su2ToIso2 => {
                if !(params.radius > 0.0 && params.radius.is_finite()) {
                    return Err(RepError::InvalidParam(format!(
                        "R must be positive, got {}",
                        params.radius
                    )));
                }
                ScheduleKind::Degree { radius: params.radius }
            }
            CaseId::Sl2ToIso11 => {
                if !(params.b > 0.0 && params.b.is_finite()) {
                    return Err(RepError::InvalidParam(format!("b must be positive, got {}", params.b)));
                }
                if params.a != 1.0 && params.a != -1.0 {
                    return Err(RepError::InvalidParam(format!("a must be +1 or -1, got {}", params.a)));
                }
                ScheduleKind::Kirillov { b: params.b }
            }
            _ => ScheduleKind::Continuous,
        };
        match id {
            CaseId::CToG1 => {
                finite_nonzero("a", params.a)?;
                finite_nonzero("b", params.b)?;
            }
            CaseId::Sl2ToIso2 => finite_nonzero("r", params.r)?,
            CaseId::Su2ToIso2 | CaseId::Sl2ToIso11 => {}
            _ => finite_nonzero("A", params.amp)?,
        }
        Ok(ContractionCase {
            id,
            edge,
            params,
            schedule_kind,
        })
    }

    fn lambda(&self) -> Rational {
        self.params.lambda.clone().expect("λ is set for parameterized cases")
    }

    fn check_eps(&self, eps: f64) -> Result<(), RepError> {
        if eps > 0.0 && eps.is_finite() {
            Ok(())
        } else {
            Err(RepError::InvalidParam(format!("ε must be positive, got {eps}")))
        }
    }

    /// The integer index `l` or `n` at ε for the sequential cases.
    pub fn index(&self, eps: f64) -> Option<i64> {
        self.schedule_kind.index_of(eps)
    }

    /// The named scalars of the parameter path at ε.
    pub fn scalars(&self, eps: f64) -> BTreeMap<&'static str, f64> {
        let p = &self.params;
        let a = p.amp;
        let mut m = BTreeMap::new();
        match self.id {
            CaseId::EaToH => {
                m.insert("a", a / eps);
                m.insert("b", -a / eps);
            }
            CaseId::Iso2ToH => {
                m.insert("r1", a / eps);
                m.insert("r2", 0.0);
            }
            CaseId::GLambdaToH => {
                let l = self.lambda().to_f64();
                m.insert("a", a / (eps * (1.0 - l)));
                m.insert("b", -a / (eps * (1.0 - l)));
            }
            CaseId::LLambdaToH => {
                m.insert("a", 0.0);
                m.insert("b", a / eps);
            }
            CaseId::CToH => {
                m.insert("a", a / eps);
                m.insert("b", 0.0);
            }
            CaseId::CToG1 => {
                m.insert("a", p.a);
                m.insert("b", p.b / eps);
            }
            CaseId::Su2ToIso2 => {
                m.insert("l", (p.radius / eps).round());
            }
            CaseId::Sl2ToIso2 => {
                m.insert("r", -p.r / eps);
            }
            CaseId::Sl2ToH => {
                m.insert("r", a / eps);
            }
            CaseId::Sl2ToIso11 => {
                m.insert("n", (4.0 * p.b / eps).sqrt().round());
            }
        }
        m
    }

    /// `V_ε`.
    pub fn space(&self, eps: f64) -> Result<FunctionSpace, RepError> {
        self.check_eps(eps)?;
        Ok(match self.id {
            CaseId::Iso2ToH | CaseId::Sl2ToH => FunctionSpace::vanishing_interval(-PI / eps, PI / eps)?,
            CaseId::Sl2ToIso2 => FunctionSpace::vanishing_interval(-PI, PI)?,
            CaseId::Su2ToIso2 => {
                FunctionSpace::deformed_sphere(self.index(eps).unwrap_or(0), eps)?
            }
            CaseId::Sl2ToIso11 => FunctionSpace::half_line_dx_over_x(),
            _ => FunctionSpace::l2_real_line(),
        })
    }

    /// The source representation at ε, on `V_ε`.
    pub fn family(&self, eps: f64) -> Result<RepRealization, RepError> {
        self.check_eps(eps)?;
        let s = self.scalars(eps);
        Ok(match self.id {
            CaseId::EaToH => ea_rep(s["a"], s["b"], eps),
            CaseId::Iso2ToH => iso2_rep(s["r1"], s["r2"], eps, self.space(eps)?),
            CaseId::GLambdaToH => g_rep(s["a"], s["b"], &self.lambda(), eps),
            CaseId::LLambdaToH => l_rep(s["a"], s["b"], &self.lambda(), eps),
            CaseId::CToH => c_rep(s["a"], s["b"], eps),
            CaseId::CToG1 => c_rep(s["a"], s["b"], 1.0),
            CaseId::Su2ToIso2 => su2_rep(s["l"] as i64, eps)?,
            CaseId::Sl2ToIso2 => principal_series(s["r"], true, 1.0, self.space(eps)?),
            CaseId::Sl2ToH => principal_series(s["r"], false, eps, self.space(eps)?),
            CaseId::Sl2ToIso11 => kirillov(s["n"] as i64, self.params.a),
        })
    }

    /// The limit representation η of the target algebra.
    pub fn limit_rep(&self) -> RepRealization {
        let p = &self.params;
        match self.id {
            CaseId::CToG1 => g_rep(p.a, p.b, &Rational::one(), 1.0),
            CaseId::Su2ToIso2 => iso2_polar(p.radius),
            CaseId::Sl2ToIso2 => {
                iso2_rep(0.0, p.r, 1.0, FunctionSpace::vanishing_interval(-PI, PI).expect("interval"))
            }
            // the conjugate Kirillov model contracts to b ↦ −b
            CaseId::Sl2ToIso11 => iso11_rep(p.a, p.a * p.b),
            _ => h_rep(p.amp),
        }
    }

    /// Space of the limit representation.
    pub fn target_space(&self) -> FunctionSpace {
        self.limit_rep().space
    }

    /// `φ_{ε_from, ε_to}` for `ε_to ≤ ε_from`.
    pub fn embedding(&self, from_eps: f64, to_eps: f64) -> Embedding {
        match self.id {
            CaseId::Iso2ToH | CaseId::Sl2ToH => Embedding::ZeroExtension {
                from: (-PI / from_eps, PI / from_eps),
                to: (-PI / to_eps, PI / to_eps),
            },
            CaseId::Su2ToIso2 => Embedding::BasisIndexMap {
                to_l: self.index(to_eps).unwrap_or(0),
                to_eps,
            },
            _ => Embedding::Identity,
        }
    }

    /// Which embedding scheme the case uses, as a short tag.
    pub fn embedding_kind(&self) -> &'static str {
        match self.id {
            CaseId::Iso2ToH | CaseId::Sl2ToH => "zero-extension",
            CaseId::Su2ToIso2 => "basis-index",
            _ => "identity",
        }
    }

    /// The limit map `L` applied to `f ∈ V_{ε₀}`.
    pub fn limit_map(&self, f: &Func, eps0: f64) -> Result<Func, RepError> {
        match self.id {
            CaseId::Iso2ToH | CaseId::Sl2ToH => Ok(embed(
                f,
                &Embedding::ZeroExtension {
                    from: (-PI / eps0, PI / eps0),
                    to: (f64::NEG_INFINITY, f64::INFINITY),
                },
            )?),
            CaseId::Su2ToIso2 => {
                let h = f.as_harmonic().ok_or(SpaceError::NotABasisVector)?;
                Ok(BesselMode::new(self.params.radius, -h.m).into_func())
            }
            _ => Ok(f.clone()),
        }
    }

    /// Names of the adapted generators `Y_k`.
    pub fn generator_names(&self) -> [String; 3] {
        self.edge.adapted_names.clone()
    }

    /// `ρ_ε(t_ε Y_k)`.
    pub fn scaled_generator(&self, k: usize, eps: f64) -> Result<DiffOp, RepError> {
        let rep = self.family(eps)?;
        let y = self.edge.adapted_generator(k);
        let ty = self.edge.scaling.eval_apply(&y, eps);
        Ok(rep.op(ty))
    }

    /// `η(ψ Y_k)`.
    pub fn limit_generator(&self, k: usize) -> DiffOp {
        let y = self.edge.adapted_generator(k);
        let py = vec_to_f64(&self.edge.psi.apply(&y));
        self.limit_rep().op(py)
    }

    /// Coordinates of `t_ε Y_k` in the source basis.
    pub fn scaled_coordinates(&self, k: usize, eps: f64) -> [f64; 3] {
        self.edge.scaling.eval_apply(&self.edge.adapted_generator(k), eps)
    }

    /// Coordinates of `ψ Y_k` in the target basis.
    pub fn limit_coordinates(&self, k: usize) -> [f64; 3] {
        vec_to_f64(&self.edge.psi.apply(&self.edge.adapted_generator(k)))
    }
}

/// The intertwined source representation of `case` at ε.
pub fn realize(case: CaseId, params: &ParamPath, eps: f64) -> Result<RepRealization, RepError> {
    ContractionCase::new(case, params.clone())?.family(eps)
}
