//! The ten proper contractions between catalog algebras.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::laurent::LaurentMonomial;
use super::lie::{verify_isomorphism, Family, LieAlgebra3};
use super::linear::{vec_from_ints, LinearMap3, Vec3};
use super::rational::Rational;
use super::scaling::{contract, ScalingMap};
use super::AlgebraError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum CaseId {
    #[serde(rename = "ea-to-h")]
    EaToH,
    #[serde(rename = "iso2-to-h")]
    Iso2ToH,
    #[serde(rename = "g-lambda-to-h")]
    GLambdaToH,
    #[serde(rename = "l-lambda-to-h")]
    LLambdaToH,
    #[serde(rename = "c-to-h")]
    CToH,
    #[serde(rename = "c-to-g1")]
    CToG1,
    #[serde(rename = "su2-to-iso2")]
    Su2ToIso2,
    #[serde(rename = "sl2-to-iso2")]
    Sl2ToIso2,
    #[serde(rename = "sl2-to-h")]
    Sl2ToH,
    #[serde(rename = "sl2-to-iso11")]
    Sl2ToIso11,
}

impl CaseId {
    pub const ALL: [CaseId; 10] = [
        CaseId::EaToH,
        CaseId::Iso2ToH,
        CaseId::GLambdaToH,
        CaseId::LLambdaToH,
        CaseId::CToH,
        CaseId::CToG1,
        CaseId::Su2ToIso2,
        CaseId::Sl2ToIso2,
        CaseId::Sl2ToH,
        CaseId::Sl2ToIso11,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            CaseId::EaToH => "ea-to-h",
            CaseId::Iso2ToH => "iso2-to-h",
            CaseId::GLambdaToH => "g-lambda-to-h",
            CaseId::LLambdaToH => "l-lambda-to-h",
            CaseId::CToH => "c-to-h",
            CaseId::CToG1 => "c-to-g1",
            CaseId::Su2ToIso2 => "su2-to-iso2",
            CaseId::Sl2ToIso2 => "sl2-to-iso2",
            CaseId::Sl2ToH => "sl2-to-h",
            CaseId::Sl2ToIso11 => "sl2-to-iso11",
        }
    }

    /// λ used when none is given (only the two parameterized sources take one).
    pub fn default_lambda(self) -> Option<Rational> {
        match self {
            CaseId::GLambdaToH => Some(Rational::from_int(2)),
            CaseId::LLambdaToH => Some(Rational::one()),
            _ => None,
        }
    }
}

impl fmt::Display for CaseId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for CaseId {
    type Err = AlgebraError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        CaseId::ALL
            .into_iter()
            .find(|c| c.as_str() == s)
            .ok_or_else(|| AlgebraError::UnknownCase(s.to_string()))
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct ContractionEdge {
    pub id: CaseId,
    pub source: LieAlgebra3,
    pub target: LieAlgebra3,
    pub scaling: ScalingMap,
    /// Maps the contracted algebra (standard basis of the source) onto `target`.
    pub psi: LinearMap3,
    /// Columns are the basis in which `scaling` is diagonal.
    pub adapted_basis: LinearMap3,
    pub adapted_names: [String; 3],
}

impl ContractionEdge {
    /// `contract` succeeds and ψ is an isomorphism onto the target.
    pub fn check(&self) -> Result<(), AlgebraError> {
        let g0 = contract(&self.source, &self.scaling)?;
        let r = verify_isomorphism(&g0, &self.target, &self.psi)?;
        if r.is_zero() {
            Ok(())
        } else {
            Err(AlgebraError::NotAHomomorphism { residual: r })
        }
    }

    /// Coordinates of the `k`-th adapted generator in the source basis.
    pub fn adapted_generator(&self, k: usize) -> Vec3 {
        self.adapted_basis.column(k)
    }
}

fn names(n: [&str; 3]) -> [String; 3] {
    n.map(String::from)
}

fn eps_c(c: Rational, k: i32) -> LaurentMonomial {
    LaurentMonomial::new(c, k)
}

/// The edge for `id`. `lambda` is only read for the two parameterized sources
/// and defaults to [`CaseId::default_lambda`].
pub fn edge(id: CaseId, lambda: Option<Rational>) -> Result<ContractionEdge, AlgebraError> {
    let one = || LaurentMonomial::one();
    let e = LaurentMonomial::eps;
    let r = Rational::from_int;
    let std = LinearMap3::identity;
    let iso2 = || Family::L.instance(Some(Rational::zero()));
    let h = || Family::H.instance(None);
    // ψ sending X2 ↦ X1ʰ, X1 ↦ X2ʰ, X3 ↦ X3ʰ
    let swap12 = || LinearMap3::from_int_rows([[0, 1, 0], [1, 0, 0], [0, 0, 1]]);

    let (source, target, basis, d, images, adapted_names) = match id {
        CaseId::EaToH => (
            Family::Ea.instance(None)?,
            h()?,
            LinearMap3::from_columns([vec_from_ints([0, 1, 0]), vec_from_ints([1, 1, 0]), vec_from_ints([0, 0, 1])]),
            [e(1), one(), eps_c(r(-1), 1)],
            std(),
            names(["X2", "X1+X2", "X3"]),
        ),
        CaseId::Iso2ToH => (iso2()?, h()?, std(), [one(), e(1), e(1)], swap12(), names(["X1", "X2", "X3"])),
        CaseId::GLambdaToH => {
            let lam = lambda.or_else(|| id.default_lambda()).unwrap();
            if lam == Rational::one() {
                return Err(AlgebraError::InvalidParameter("g(λ) → h needs λ ≠ 1".into()));
            }
            let src = Family::G.instance(Some(lam.clone()))?;
            (
                src,
                h()?,
                LinearMap3::from_columns([vec_from_ints([1, 0, 0]), vec_from_ints([1, 1, 0]), vec_from_ints([0, 0, 1])]),
                [eps_c(&Rational::one() - &lam, 1), one(), e(1)],
                std(),
                names(["X1", "X1+X2", "X3"]),
            )
        }
        CaseId::LLambdaToH => {
            let lam = lambda.or_else(|| id.default_lambda()).unwrap();
            if lam.is_zero() {
                return Err(AlgebraError::InvalidParameter("l(λ) → h needs λ ≠ 0".into()));
            }
            (
                Family::L.instance(Some(lam))?,
                h()?,
                std(),
                [one(), e(1), e(1)],
                swap12(),
                names(["X1", "X2", "X3"]),
            )
        }
        CaseId::CToH => (Family::C.instance(None)?, h()?, std(), [e(1), one(), e(1)], std(), names(["X1", "X2", "X3"])),
        CaseId::CToG1 => (
            Family::C.instance(None)?,
            Family::G.instance(Some(Rational::one()))?,
            std(),
            [one(), e(1), one()],
            std(),
            names(["X1", "X2", "X3"]),
        ),
        CaseId::Su2ToIso2 => (
            Family::Su2.instance(None)?,
            iso2()?,
            std(),
            [e(1), e(1), one()],
            // X1 ↦ −X2', X2 ↦ X1', X3 ↦ X3'
            LinearMap3::from_int_rows([[0, 1, 0], [-1, 0, 0], [0, 0, 1]]),
            names(["X1", "X2", "X3"]),
        ),
        CaseId::Sl2ToIso2 => (
            Family::Sl2.instance(None)?,
            iso2()?,
            std(),
            [e(1), e(1), eps_c(r(-1), 0)],
            std(),
            names(["X1", "X2", "X3"]),
        ),
        CaseId::Sl2ToH => (
            Family::Sl2.instance(None)?,
            h()?,
            LinearMap3::from_columns([vec_from_ints([1, 0, 0]), vec_from_ints([0, 1, 1]), vec_from_ints([0, 1, 0])]),
            [eps_c(r(-1), 1), one(), e(1)],
            std(),
            names(["X1", "X2+X3", "X2"]),
        ),
        CaseId::Sl2ToIso11 => (
            Family::Sl2.instance(None)?,
            Family::G.instance(Some(r(-1)))?,
            // X = X1 − X3, Y − X = 2X3, H = 2X2
            LinearMap3::from_columns([vec_from_ints([1, 0, -1]), vec_from_ints([0, 0, 2]), vec_from_ints([0, 2, 0])]),
            [one(), e(1), eps_c(Rational::new(1, 2), 0)],
            std(),
            names(["X", "Y-X", "H"]),
        ),
    };
    let scaling = ScalingMap::adapted(&basis, d)?;
    // ψ(b_k) = images[:, k]  ⇒  ψ = images · B⁻¹
    let psi = images.compose(&basis.inverse().ok_or(AlgebraError::SingularMap)?);
    Ok(ContractionEdge {
        id,
        source,
        target,
        scaling,
        psi,
        adapted_basis: basis,
        adapted_names,
    })
}

/// All ten edges, parameterized sources at their default λ.
pub fn contraction_graph() -> Vec<ContractionEdge> {
    CaseId::ALL
        .iter()
        .map(|&id| edge(id, None).expect("default edges are valid"))
        .collect()
}
