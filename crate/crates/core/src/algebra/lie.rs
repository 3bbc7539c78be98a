//! Three-dimensional real Lie algebras given by structure constants.

use std::fmt;

use serde::{Deserialize, Serialize};

use super::linear::{basis_vec, vec_add, vec_max_abs, vec_scale, vec_sub, zero_vec, LinearMap3, Vec3};
use super::rational::Rational;
use super::AlgebraError;

/// Family tag of the catalog.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    Ab,
    H,
    Ea,
    G,
    C,
    L,
    Su2,
    Sl2,
    Custom,
}

impl Family {
    pub const CATALOG: [Family; 8] = [
        Family::Ab,
        Family::H,
        Family::Ea,
        Family::G,
        Family::C,
        Family::L,
        Family::Su2,
        Family::Sl2,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::Ab => "ab",
            Family::H => "h",
            Family::Ea => "ea",
            Family::G => "g",
            Family::C => "c",
            Family::L => "l",
            Family::Su2 => "su2",
            Family::Sl2 => "sl2",
            Family::Custom => "custom",
        }
    }

    pub fn has_parameter(self) -> bool {
        matches!(self, Family::G | Family::L)
    }

    /// λ used when a parameterized family is listed without an explicit value:
    /// g(−1) = iso(1,1) and l(0) = iso(2).
    pub fn default_lambda(self) -> Option<Rational> {
        match self {
            Family::G => Some(Rational::from_int(-1)),
            Family::L => Some(Rational::zero()),
            _ => None,
        }
    }

    /// Builds the catalog member. `lambda` is required for g and l and must be
    /// absent for the other families.
    pub fn instance(self, lambda: Option<Rational>) -> Result<LieAlgebra3, AlgebraError> {
        let r = Rational::from_int;
        let v = |a: i64, b: i64, c: i64| [r(a), r(b), r(c)];
        let mut alg = LieAlgebra3::abelian();
        alg.label = self;
        match (self, &lambda) {
            (Family::Ab, None) => {}
            (Family::H, None) => alg.set_bracket(2, 1, v(1, 0, 0)),
            (Family::Ea, None) => alg.set_bracket(2, 0, v(1, 0, 0)),
            (Family::G, Some(lam)) => {
                if lam.is_zero() {
                    return Err(AlgebraError::InvalidParameter(
                        "g(λ) requires λ ≠ 0".into(),
                    ));
                }
                alg.set_bracket(2, 0, v(1, 0, 0));
                alg.set_bracket(2, 1, [Rational::zero(), lam.clone(), Rational::zero()]);
            }
            (Family::C, None) => {
                alg.set_bracket(2, 0, v(1, 0, 0));
                alg.set_bracket(2, 1, v(1, 1, 0));
            }
            (Family::L, Some(lam)) => {
                alg.set_bracket(2, 0, [lam.clone(), r(1), r(0)]);
                alg.set_bracket(2, 1, [r(-1), lam.clone(), r(0)]);
            }
            (Family::Su2, None) => {
                alg.set_bracket(0, 1, v(0, 0, 1));
                alg.set_bracket(1, 2, v(1, 0, 0));
                alg.set_bracket(2, 0, v(0, 1, 0));
            }
            (Family::Sl2, None) => {
                alg.set_bracket(0, 1, v(0, 0, 1));
                alg.set_bracket(1, 2, v(-1, 0, 0));
                alg.set_bracket(2, 0, v(0, -1, 0));
            }
            (Family::Custom, _) => {
                return Err(AlgebraError::InvalidParameter(
                    "custom is not a catalog family".into(),
                ))
            }
            (f, Some(_)) => {
                return Err(AlgebraError::InvalidParameter(format!(
                    "{} takes no parameter",
                    f.name()
                )))
            }
            (f, None) => {
                return Err(AlgebraError::InvalidParameter(format!(
                    "{}(λ) requires a parameter",
                    f.name()
                )))
            }
        }
        alg.lambda = lambda;
        Ok(alg)
    }

    /// Instance at the default λ for parameterized families.
    pub fn default_instance(self) -> LieAlgebra3 {
        self.instance(self.default_lambda())
            .expect("default catalog parameters are valid")
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for Family {
    type Err = AlgebraError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let f = match s.to_ascii_lowercase().as_str() {
            "ab" => Family::Ab,
            "h" => Family::H,
            "ea" => Family::Ea,
            "g" => Family::G,
            "c" => Family::C,
            "l" => Family::L,
            "su2" => Family::Su2,
            "sl2" => Family::Sl2,
            "custom" => Family::Custom,
            _ => return Err(AlgebraError::UnknownFamily(s.to_string())),
        };
        Ok(f)
    }
}

/// `structure[i][j][k]` is the coefficient of `e_k` in `[e_i, e_j]`.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct LieAlgebra3 {
    pub label: Family,
    pub lambda: Option<Rational>,
    pub structure: [[[Rational; 3]; 3]; 3],
    pub basis_names: [String; 3],
}

impl LieAlgebra3 {
    pub fn abelian() -> Self {
        LieAlgebra3 {
            label: Family::Ab,
            lambda: None,
            structure: std::array::from_fn(|_| std::array::from_fn(|_| zero_vec())),
            basis_names: ["X1".into(), "X2".into(), "X3".into()],
        }
    }

    /// Custom algebra from structure constants. Antisymmetry is checked;
    /// the Jacobi identity is not (see [`jacobi_residual`]).
    pub fn custom(structure: [[[Rational; 3]; 3]; 3]) -> Result<Self, AlgebraError> {
        let alg = LieAlgebra3 {
            label: Family::Custom,
            lambda: None,
            structure,
            basis_names: ["X1".into(), "X2".into(), "X3".into()],
        };
        alg.check_antisymmetric()?;
        Ok(alg)
    }

    /// Sets `[e_i, e_j] = v` and `[e_j, e_i] = −v`.
    pub fn set_bracket(&mut self, i: usize, j: usize, v: Vec3) {
        self.structure[j][i] = vec_scale(&v, &Rational::from_int(-1));
        self.structure[i][j] = v;
    }

    pub fn check_antisymmetric(&self) -> Result<(), AlgebraError> {
        for i in 0..3 {
            for j in 0..3 {
                let s = vec_add(&self.structure[i][j], &self.structure[j][i]);
                if s.iter().any(|c| !c.is_zero()) {
                    return Err(AlgebraError::NotAntisymmetric { i, j });
                }
            }
        }
        Ok(())
    }

    pub fn basis_bracket(&self, i: usize, j: usize) -> &Vec3 {
        &self.structure[i][j]
    }

    /// Brackets relabelled as a plain algebra with the same label and λ.
    pub fn relabel(mut self, label: Family, lambda: Option<Rational>) -> Self {
        self.label = label;
        self.lambda = lambda;
        self
    }

    /// Structure constants in the basis `e'_k = Σ_j b[j][k] e_j`.
    pub fn change_basis(&self, b: &LinearMap3) -> Result<LieAlgebra3, AlgebraError> {
        let inv = b.inverse().ok_or(AlgebraError::SingularMap)?;
        let cols = [b.column(0), b.column(1), b.column(2)];
        let mut out = LieAlgebra3::abelian();
        out.label = Family::Custom;
        for i in 0..3 {
            for j in 0..3 {
                out.structure[i][j] = inv.apply(&bracket(self, &cols[i], &cols[j]));
            }
        }
        Ok(out)
    }

    /// One line per nonzero bracket `[Xi,Xj]=…` with i<j in the order (1,2),(2,3),(3,1)
    /// when that reads naturally, else (i,j) with i<j.
    pub fn relations(&self) -> Vec<String> {
        let mut out = Vec::new();
        for (i, j) in [(0, 1), (1, 2), (2, 0)] {
            let (a, b, v) = orient(self, i, j);
            if v.iter().all(Rational::is_zero) {
                continue;
            }
            out.push(format!(
                "[{},{}]={}",
                self.basis_names[a],
                self.basis_names[b],
                format_combination(&v, &self.basis_names)
            ));
        }
        out
    }

    pub fn display_name(&self) -> String {
        match (&self.label, &self.lambda) {
            (f, Some(l)) => format!("{}({})", f, l),
            (f, None) => f.to_string(),
        }
    }
}

// Brackets are displayed with X3 first, as in the usual tables of the catalog.
fn orient(alg: &LieAlgebra3, i: usize, j: usize) -> (usize, usize, Vec3) {
    let (a, b) = if i == 1 && j == 2 && !matches!(alg.label, Family::Su2 | Family::Sl2) {
        (2, 1)
    } else {
        (i, j)
    };
    (a, b, alg.structure[a][b].clone())
}

pub fn format_combination(v: &Vec3, names: &[String; 3]) -> String {
    let mut s = String::new();
    for (k, c) in v.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let neg = c.is_negative();
        let mag = c.abs();
        if s.is_empty() {
            if neg {
                s.push('-');
            }
        } else {
            s.push_str(if neg { "-" } else { "+" });
        }
        if mag != Rational::one() {
            s.push_str(&mag.to_string());
        }
        s.push_str(&names[k]);
    }
    if s.is_empty() {
        s.push('0');
    }
    s
}

impl fmt::Debug for LieAlgebra3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {{{}}}", self.display_name(), self.relations().join(", "))
    }
}

/// `Σ c^k_{ij} x_i y_j e_k`.
pub fn bracket(alg: &LieAlgebra3, x: &Vec3, y: &Vec3) -> Vec3 {
    let mut out = zero_vec();
    for i in 0..3 {
        if x[i].is_zero() {
            continue;
        }
        for j in 0..3 {
            if y[j].is_zero() {
                continue;
            }
            let w = &x[i] * &y[j];
            out = vec_add(&out, &vec_scale(&alg.structure[i][j], &w));
        }
    }
    out
}

/// Largest coefficient of the Jacobi sum over all basis triples.
pub fn jacobi_residual(alg: &LieAlgebra3) -> Rational {
    let e: [Vec3; 3] = std::array::from_fn(basis_vec);
    let mut worst = Rational::zero();
    for i in 0..3 {
        for j in 0..3 {
            for k in 0..3 {
                let t1 = bracket(alg, &bracket(alg, &e[i], &e[j]), &e[k]);
                let t2 = bracket(alg, &bracket(alg, &e[j], &e[k]), &e[i]);
                let t3 = bracket(alg, &bracket(alg, &e[k], &e[i]), &e[j]);
                let m = vec_max_abs(&vec_add(&vec_add(&t1, &t2), &t3));
                if m > worst {
                    worst = m;
                }
            }
        }
    }
    worst
}

/// The 8 catalog families, parameterized ones at their default λ.
pub fn catalog() -> Vec<LieAlgebra3> {
    Family::CATALOG.iter().map(|f| f.default_instance()).collect()
}

/// `max |ψ[x,y]_a − [ψx,ψy]_b|` over basis pairs.
pub fn verify_isomorphism(
    a: &LieAlgebra3,
    b: &LieAlgebra3,
    psi: &LinearMap3,
) -> Result<Rational, AlgebraError> {
    if !psi.is_invertible() {
        return Err(AlgebraError::SingularMap);
    }
    let e: [Vec3; 3] = std::array::from_fn(basis_vec);
    let mut worst = Rational::zero();
    for i in 0..3 {
        for j in 0..3 {
            let lhs = psi.apply(&bracket(a, &e[i], &e[j]));
            let rhs = bracket(b, &psi.column(i), &psi.column(j));
            let m = vec_max_abs(&vec_sub(&lhs, &rhs));
            if m > worst {
                worst = m;
            }
        }
    }
    Ok(worst)
}

/// Killing form `K(x,y) = tr(ad x ∘ ad y)` on basis vectors.
pub fn killing_form(alg: &LieAlgebra3) -> [[Rational; 3]; 3] {
    let ad: [LinearMap3; 3] = std::array::from_fn(|i| ad_matrix(alg, &basis_vec(i)));
    std::array::from_fn(|i| {
        std::array::from_fn(|j| {
            let p = ad[i].compose(&ad[j]);
            &(&p.rows[0][0] + &p.rows[1][1]) + &p.rows[2][2]
        })
    })
}

pub fn killing(alg: &LieAlgebra3, x: &Vec3, y: &Vec3) -> Rational {
    let p = ad_matrix(alg, x).compose(&ad_matrix(alg, y));
    &(&p.rows[0][0] + &p.rows[1][1]) + &p.rows[2][2]
}

/// Matrix of `ad x` in the basis.
pub fn ad_matrix(alg: &LieAlgebra3, x: &Vec3) -> LinearMap3 {
    LinearMap3::from_columns(std::array::from_fn(|j| bracket(alg, x, &basis_vec(j))))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::linear::vec_from_ints;

    fn e(i: usize) -> Vec3 {
        basis_vec(i)
    }

    #[test]
    fn su2_table_relations() {
        let su2 = Family::Su2.default_instance();
        assert_eq!(bracket(&su2, &e(0), &e(1)), e(2));
        assert_eq!(bracket(&su2, &e(1), &e(2)), e(0));
        assert_eq!(bracket(&su2, &e(2), &e(0)), e(1));
    }

    #[test]
    fn h_relations() {
        let h = Family::H.default_instance();
        assert_eq!(bracket(&h, &e(2), &e(1)), e(0));
        assert_eq!(bracket(&h, &e(0), &e(1)), zero_vec());
    }

    #[test]
    fn catalog_is_jacobi_clean() {
        for alg in catalog() {
            assert!(jacobi_residual(&alg).is_zero(), "{alg:?}");
        }
        for lam in [-3, -1, 1, 2, 5] {
            let g = Family::G.instance(Some(Rational::new(lam, 2))).unwrap();
            assert!(jacobi_residual(&g).is_zero());
            let l = Family::L.instance(Some(Rational::new(lam, 3))).unwrap();
            assert!(jacobi_residual(&l).is_zero());
        }
    }

    #[test]
    fn perturbed_su2_jacobi() {
        // a diagonal rescaling c^1_{23} = 2 is still a Lie algebra
        let mut alg = Family::Su2.default_instance();
        alg.set_bracket(1, 2, vec_from_ints([2, 0, 0]));
        let custom = LieAlgebra3::custom(alg.structure.clone()).unwrap();
        assert!(jacobi_residual(&custom).is_zero());
        // an off-diagonal term is not: [[X2,X3],X1] = -X3
        alg.set_bracket(1, 2, vec_from_ints([1, 1, 0]));
        assert_eq!(jacobi_residual(&alg), Rational::one());
    }

    #[test]
    fn invalid_parameters_are_rejected() {
        assert!(Family::G.instance(Some(Rational::zero())).is_err());
        assert!(Family::G.instance(None).is_err());
        assert!(Family::H.instance(Some(Rational::one())).is_err());
    }

    #[test]
    fn killing_form_of_simple_algebras() {
        let k = killing_form(&Family::Su2.default_instance());
        for i in 0..3 {
            for j in 0..3 {
                let want = if i == j { -2 } else { 0 };
                assert_eq!(k[i][j], Rational::from_int(want));
            }
        }
        let k = killing_form(&Family::Sl2.default_instance());
        assert_eq!(k[0][0], Rational::from_int(2));
        assert_eq!(k[1][1], Rational::from_int(2));
        assert_eq!(k[2][2], Rational::from_int(-2));
    }

    #[test]
    fn swap_is_not_an_automorphism_of_h() {
        let h = Family::H.default_instance();
        let swap = LinearMap3::from_int_rows([[0, 1, 0], [1, 0, 0], [0, 0, 1]]);
        assert!(!verify_isomorphism(&h, &h, &swap).unwrap().is_zero());
        assert!(verify_isomorphism(&h, &h, &LinearMap3::identity()).unwrap().is_zero());
    }

    #[test]
    fn relations_read_like_the_table() {
        let c = Family::C.default_instance();
        assert_eq!(c.relations(), vec!["[X3,X2]=X1+X2", "[X3,X1]=X1"]);
    }
}
