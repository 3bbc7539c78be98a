//! Scaling maps t_ε with Laurent entries and the exact contraction limit.

use std::fmt;

use serde::{Deserialize, Serialize};

use super::laurent::{LaurentMonomial, LaurentPoly};
use super::lie::{jacobi_residual, Family, LieAlgebra3};
use super::linear::{LinearMap3, Vec3};
use super::rational::Rational;
use super::AlgebraError;

/// `t_ε` as a 3×3 matrix of Laurent polynomials, `rows[r][c]` the `r`-th
/// coordinate of `t_ε(e_c)`.
///
/// Every map in the contraction graph is diagonal in an adapted basis, which
/// makes its standard-basis entries polynomial rather than monomial; the
/// determinant is still required to be a single nonzero monomial, so the
/// inverse is again Laurent.
#[derive(Clone, PartialEq, Eq, Serialize)]
pub struct ScalingMap {
    rows: [[LaurentPoly; 3]; 3],
    #[serde(skip)]
    det: LaurentMonomial,
}

impl ScalingMap {
    pub fn new(rows: [[LaurentPoly; 3]; 3]) -> Result<Self, AlgebraError> {
        let det = det3(&rows);
        let det = det.as_monomial().ok_or(AlgebraError::NonMonomialDeterminant)?;
        if det.is_zero() {
            return Err(AlgebraError::SingularMap);
        }
        Ok(ScalingMap { rows, det })
    }

    pub fn identity() -> Self {
        Self::diag([
            LaurentMonomial::one(),
            LaurentMonomial::one(),
            LaurentMonomial::one(),
        ])
        .expect("identity is invertible")
    }

    pub fn diag(d: [LaurentMonomial; 3]) -> Result<Self, AlgebraError> {
        let rows = std::array::from_fn(|r| {
            std::array::from_fn(|c| {
                if r == c {
                    LaurentPoly::from(d[r].clone())
                } else {
                    LaurentPoly::zero()
                }
            })
        });
        Self::new(rows)
    }

    /// `t_ε(b_k) = d_k b_k` for the adapted basis `b_k` = columns of `basis`,
    /// i.e. `T = B D B⁻¹` in the standard basis.
    pub fn adapted(basis: &LinearMap3, d: [LaurentMonomial; 3]) -> Result<Self, AlgebraError> {
        let inv = basis.inverse().ok_or(AlgebraError::SingularMap)?;
        let rows = std::array::from_fn(|r| {
            std::array::from_fn(|c| {
                let mut acc = LaurentPoly::zero();
                for k in 0..3 {
                    let w = &basis.rows[r][k] * &inv.rows[k][c];
                    if !w.is_zero() {
                        acc = &acc + &LaurentPoly::from(d[k].clone()).scale(&w);
                    }
                }
                acc
            })
        });
        Self::new(rows)
    }

    pub fn entry(&self, r: usize, c: usize) -> &LaurentPoly {
        &self.rows[r][c]
    }

    pub fn rows(&self) -> &[[LaurentPoly; 3]; 3] {
        &self.rows
    }

    pub fn determinant(&self) -> &LaurentMonomial {
        &self.det
    }

    /// Entry-wise monomials when the map is monomial, e.g. for display.
    pub fn is_monomial(&self) -> bool {
        self.rows.iter().flatten().all(|p| p.as_monomial().is_some())
    }

    pub fn inverse(&self) -> ScalingMap {
        let m = &self.rows;
        let cof = |r0: usize, r1: usize, c0: usize, c1: usize| {
            &(&m[r0][c0] * &m[r1][c1]) - &(&m[r0][c1] * &m[r1][c0])
        };
        let adj = [
            [cof(1, 2, 1, 2), -&cof(0, 2, 1, 2), cof(0, 1, 1, 2)],
            [-&cof(1, 2, 0, 2), cof(0, 2, 0, 2), -&cof(0, 1, 0, 2)],
            [cof(1, 2, 0, 1), -&cof(0, 2, 0, 1), cof(0, 1, 0, 1)],
        ];
        let inv_det = self.det.recip().expect("determinant is nonzero");
        let rows = adj.map(|row| row.map(|p| p.mul_monomial(&inv_det)));
        ScalingMap {
            rows,
            det: inv_det,
        }
    }

    pub fn apply(&self, v: &[LaurentPoly; 3]) -> [LaurentPoly; 3] {
        std::array::from_fn(|r| {
            let mut acc = LaurentPoly::zero();
            for c in 0..3 {
                acc = &acc + &(&self.rows[r][c] * &v[c]);
            }
            acc
        })
    }

    pub fn apply_rational(&self, v: &Vec3) -> [LaurentPoly; 3] {
        self.apply(&v.clone().map(LaurentPoly::from))
    }

    /// Numerical `t_ε(v)` for a rational vector.
    pub fn eval_apply(&self, v: &Vec3, eps: f64) -> [f64; 3] {
        self.apply_rational(v).map(|p| p.eval(eps))
    }

    pub fn eval(&self, eps: f64) -> [[f64; 3]; 3] {
        std::array::from_fn(|r| std::array::from_fn(|c| self.rows[r][c].eval(eps)))
    }
}

fn det3(m: &[[LaurentPoly; 3]; 3]) -> LaurentPoly {
    let t1 = &m[0][0] * &(&(&m[1][1] * &m[2][2]) - &(&m[1][2] * &m[2][1]));
    let t2 = &m[0][1] * &(&(&m[1][0] * &m[2][2]) - &(&m[1][2] * &m[2][0]));
    let t3 = &m[0][2] * &(&(&m[1][0] * &m[2][1]) - &(&m[1][1] * &m[2][0]));
    &(&t1 - &t2) + &t3
}

impl fmt::Debug for ScalingMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, row) in self.rows.iter().enumerate() {
            if i > 0 {
                write!(f, "; ")?;
            }
            let parts: Vec<String> = row.iter().map(|p| format!("{p}")).collect();
            write!(f, "{}", parts.join(", "))?;
        }
        write!(f, "]")
    }
}

#[derive(Deserialize)]
struct ScalingMapRepr {
    rows: [[LaurentPoly; 3]; 3],
}

impl<'de> Deserialize<'de> for ScalingMap {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let repr = ScalingMapRepr::deserialize(d)?;
        ScalingMap::new(repr.rows).map_err(serde::de::Error::custom)
    }
}

/// An `ε`-dependent structure constant with negative powers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DivergentEntry {
    pub i: usize,
    pub j: usize,
    pub k: usize,
    pub value: LaurentPoly,
}

impl fmt::Display for DivergentEntry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[X{},X{}] component X{}: {}",
            self.i + 1,
            self.j + 1,
            self.k + 1,
            self.value
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("contraction diverges in {} entr{}: {}", .entries.len(),
        if .entries.len() == 1 { "y" } else { "ies" },
        .entries.iter().map(|e| e.to_string()).collect::<Vec<_>>().join("; "))]
pub struct DivergenceError {
    pub entries: Vec<DivergentEntry>,
}

pub type LaurentStructure = [[[LaurentPoly; 3]; 3]; 3];

/// `t_ε⁻¹ [t_ε e_i, t_ε e_j]` expanded exactly in ε.
pub fn scaled_structure(alg: &LieAlgebra3, t: &ScalingMap) -> LaurentStructure {
    let inv = t.inverse();
    let cols: [[LaurentPoly; 3]; 3] =
        std::array::from_fn(|c| std::array::from_fn(|r| t.entry(r, c).clone()));
    std::array::from_fn(|i| {
        std::array::from_fn(|j| {
            let mut v: [LaurentPoly; 3] = std::array::from_fn(|_| LaurentPoly::zero());
            for a in 0..3 {
                if cols[i][a].is_zero() {
                    continue;
                }
                for b in 0..3 {
                    if cols[j][b].is_zero() {
                        continue;
                    }
                    let w = &cols[i][a] * &cols[j][b];
                    for k in 0..3 {
                        let c = &alg.structure[a][b][k];
                        if !c.is_zero() {
                            v[k] = &v[k] + &w.scale(c);
                        }
                    }
                }
            }
            inv.apply(&v)
        })
    })
}

/// The ε → 0 limit of the scaled brackets, or every entry that blows up.
pub fn contract(alg: &LieAlgebra3, t: &ScalingMap) -> Result<LieAlgebra3, DivergenceError> {
    let s = scaled_structure(alg, t);
    let mut entries = Vec::new();
    let mut out = LieAlgebra3::abelian();
    for i in 0..3 {
        for j in 0..3 {
            for k in 0..3 {
                match s[i][j][k].limit_at_zero() {
                    Some(c) => out.structure[i][j][k] = c,
                    None => entries.push(DivergentEntry {
                        i,
                        j,
                        k,
                        value: s[i][j][k].clone(),
                    }),
                }
            }
        }
    }
    if !entries.is_empty() {
        return Err(DivergenceError { entries });
    }
    out.label = Family::Custom;
    debug_assert!(jacobi_residual(&out) == Rational::zero());
    // identity-like scalings leave the algebra unchanged; keep its tag then
    if out.structure == alg.structure {
        out.label = alg.label;
        out.lambda = alg.lambda.clone();
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::linear::basis_vec;

    fn eps(k: i32) -> LaurentMonomial {
        LaurentMonomial::eps(k)
    }

    #[test]
    fn su2_to_iso2_limit() {
        let su2 = Family::Su2.default_instance();
        let t = ScalingMap::diag([eps(1), eps(1), eps(0)]).unwrap();
        let g0 = contract(&su2, &t).unwrap();
        assert_eq!(g0.structure[2][0], basis_vec(1));
        let minus_x1 = [Rational::from_int(-1), Rational::zero(), Rational::zero()];
        assert_eq!(g0.structure[2][1], minus_x1);
        assert!(g0.structure[0][1].iter().all(Rational::is_zero));
    }

    #[test]
    fn divergence_lists_offending_entries() {
        let su2 = Family::Su2.default_instance();
        let t = ScalingMap::diag([eps(0), eps(0), eps(1)]).unwrap();
        let err = contract(&su2, &t).unwrap_err();
        assert!(err
            .entries
            .iter()
            .any(|e| e.i == 0 && e.j == 1 && e.k == 2 && e.value.min_exponent() == Some(-1)));
        // antisymmetric partner is reported too
        assert!(err.entries.iter().any(|e| e.i == 1 && e.j == 0 && e.k == 2));
    }

    #[test]
    fn identity_scaling_is_a_fixed_point() {
        for alg in crate::algebra::lie::catalog() {
            assert_eq!(contract(&alg, &ScalingMap::identity()).unwrap(), alg);
        }
    }

    #[test]
    fn adapted_map_inverse() {
        let b = LinearMap3::from_int_rows([[0, 1, 0], [1, 1, 0], [0, 0, 1]]);
        let t = ScalingMap::adapted(
            &b,
            [
                eps(1),
                eps(0),
                LaurentMonomial::new(Rational::from_int(-1), 1),
            ],
        )
        .unwrap();
        assert!(!t.is_monomial());
        let inv = t.inverse();
        for c in 0..3 {
            let e = basis_vec(c).map(LaurentPoly::from);
            let back = inv.apply(&t.apply(&e));
            assert_eq!(back, e);
        }
    }

    #[test]
    fn non_monomial_determinant_is_rejected() {
        let one = LaurentPoly::constant(Rational::one());
        let z = LaurentPoly::zero();
        let p = LaurentPoly::from_terms([(0, Rational::one()), (1, Rational::one())]);
        let rows = [
            [p, z.clone(), z.clone()],
            [z.clone(), one.clone(), z.clone()],
            [z.clone(), z, one],
        ];
        assert_eq!(ScalingMap::new(rows), Err(AlgebraError::NonMonomialDeterminant));
    }

    #[test]
    fn json_roundtrip() {
        let t = ScalingMap::diag([eps(1), eps(1), eps(0)]).unwrap();
        let js = serde_json::to_string(&t).unwrap();
        assert!(js.contains(r#"{"coeff":"1/1","exp":1}"#));
        let back: ScalingMap = serde_json::from_str(&js).unwrap();
        assert_eq!(back, t);
    }
}
