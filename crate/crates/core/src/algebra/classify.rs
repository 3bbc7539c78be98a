//! Identification of a 3-dimensional Lie algebra with a catalog family.

use serde::Serialize;

use super::lie::{bracket, jacobi_residual, killing, killing_form, verify_isomorphism, Family, LieAlgebra3};
use super::linear::{
    basis_vec, coordinates, nullspace, rank, row_reduce, vec_add, vec_is_zero, vec_scale,
    LinearMap3, Vec3,
};
use super::rational::Rational;
use super::AlgebraError;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Classification {
    pub family: Family,
    pub lambda: Option<Rational>,
    /// Isomorphism onto the catalog instance of `family`/`lambda`.
    /// For the simple algebras the witness comes from a bounded search and may
    /// be absent.
    pub witness: Option<LinearMap3>,
}

impl Classification {
    pub fn canonical(&self) -> LieAlgebra3 {
        self.family
            .instance(self.lambda.clone())
            .expect("classification returns valid parameters")
    }

    pub fn display_name(&self) -> String {
        let base = match &self.lambda {
            Some(l) => format!("{}({})", self.family, l),
            None => self.family.to_string(),
        };
        match (self.family, &self.lambda) {
            (Family::G, Some(l)) if *l == Rational::from_int(-1) => format!("{base} = iso(1,1)"),
            (Family::L, Some(l)) if l.is_zero() => format!("{base} = iso(2)"),
            _ => base,
        }
    }

    /// Normalization applied to λ, if any.
    pub fn lambda_convention(&self) -> Option<&'static str> {
        match self.family {
            Family::G => Some("g(λ) ≅ g(1/λ); reported with |λ| ≤ 1"),
            Family::L => Some("l(λ) ≅ l(−λ); reported with λ ≥ 0"),
            _ => None,
        }
    }
}

/// Classifies `alg` by the dimension of its derived algebra, the adjoint
/// action on it, and (for simple algebras) the signature of the Killing form.
pub fn classify(alg: &LieAlgebra3) -> Result<Classification, AlgebraError> {
    alg.check_antisymmetric()?;
    let residual = jacobi_residual(alg);
    if !residual.is_zero() {
        return Err(AlgebraError::NotALieAlgebra { residual });
    }
    let mut c = classify_unchecked(alg)?;
    // prefer the identity whenever the algebra already is the catalog instance
    if c.canonical().structure == alg.structure {
        c.witness = Some(LinearMap3::identity());
    }
    if let Some(w) = &c.witness {
        debug_assert!(verify_isomorphism(alg, &c.canonical(), w)
            .map(|r| r.is_zero())
            .unwrap_or(false));
    }
    Ok(c)
}

fn classify_unchecked(alg: &LieAlgebra3) -> Result<Classification, AlgebraError> {
    let mut brackets = Vec::new();
    for i in 0..3 {
        for j in (i + 1)..3 {
            brackets.push(alg.structure[i][j].clone());
        }
    }
    let derived = row_reduce(&brackets);
    match derived.len() {
        0 => Ok(Classification {
            family: Family::Ab,
            lambda: None,
            witness: Some(LinearMap3::identity()),
        }),
        1 => Ok(rank_one(alg, &derived[0])),
        2 => rank_two(alg, &derived),
        _ => Ok(simple(alg)),
    }
}

fn witness_from(cols: [Vec3; 3]) -> Option<LinearMap3> {
    LinearMap3::from_columns(cols).inverse()
}

fn rank_one(alg: &LieAlgebra3, z: &Vec3) -> Classification {
    let e: [Vec3; 3] = std::array::from_fn(basis_vec);
    let central = e.iter().all(|x| vec_is_zero(&bracket(alg, z, x)));
    if central {
        // any non-commuting pair gives [Y3,Y2] = Y1 with Y1 central
        let (y3, y2) = (0..3)
            .flat_map(|i| (0..3).map(move |j| (i, j)))
            .find(|&(i, j)| !vec_is_zero(&alg.structure[i][j]))
            .map(|(i, j)| (e[i].clone(), e[j].clone()))
            .expect("derived algebra is nonzero");
        let y1 = bracket(alg, &y3, &y2);
        return Classification {
            family: Family::H,
            lambda: None,
            witness: witness_from([y1, y2, y3]),
        };
    }
    // [x, z] = μ z for some basis vector with μ ≠ 0
    let (x, mu) = e
        .iter()
        .find_map(|x| {
            let w = bracket(alg, x, z);
            let k = (0..3).find(|&k| !z[k].is_zero())?;
            let mu = &w[k] / &z[k];
            (!mu.is_zero()).then(|| (x.clone(), mu))
        })
        .expect("non-central derived algebra");
    let y3 = vec_scale(&x, &mu.recip());
    let center_rows: Vec<Vec3> = (0..3)
        .flat_map(|k| {
            (0..3).map(move |c| -> Vec3 {
                // functional x ↦ c-th coordinate of [x, e_k]
                std::array::from_fn(|i| alg.structure[i][k][c].clone())
            })
        })
        .collect();
    let witness = nullspace(&center_rows)
        .into_iter()
        .next()
        .and_then(|y2| witness_from([z.clone(), y2, y3]));
    Classification {
        family: Family::Ea,
        lambda: None,
        witness,
    }
}

fn rank_two(alg: &LieAlgebra3, derived: &[Vec3]) -> Result<Classification, AlgebraError> {
    let (d1, d2) = (derived[0].clone(), derived[1].clone());
    let z = (0..3)
        .map(basis_vec)
        .find(|x| rank(&[d1.clone(), d2.clone(), x.clone()]) == 3)
        .expect("a basis vector lies outside a plane");
    let frame = LinearMap3::from_columns([d1.clone(), d2.clone(), z.clone()]);
    // A = ad z on the derived algebra in the basis (d1, d2)
    let col = |d: &Vec3| coordinates(&frame, &bracket(alg, &z, d)).expect("frame is a basis");
    let (c1, c2) = (col(&d1), col(&d2));
    let a = [[c1[0].clone(), c2[0].clone()], [c1[1].clone(), c2[1].clone()]];
    let tr = &a[0][0] + &a[1][1];
    let det = &(&a[0][0] * &a[1][1]) - &(&a[0][1] * &a[1][0]);
    let disc = &(&tr * &tr) - &(&det * &Rational::from_int(4));
    let half = Rational::new(1, 2);
    let in_plane = |v: [Rational; 2]| -> Vec3 {
        let p = vec_scale(&d1, &v[0]);
        let q = vec_scale(&d2, &v[1]);
        std::array::from_fn(|i| &p[i] + &q[i])
    };
    let apply_a = |v: &[Rational; 2]| -> [Rational; 2] {
        [
            &(&a[0][0] * &v[0]) + &(&a[0][1] * &v[1]),
            &(&a[1][0] * &v[0]) + &(&a[1][1] * &v[1]),
        ]
    };

    if disc.is_positive() {
        let root = disc
            .sqrt_exact()
            .ok_or_else(|| AlgebraError::IrrationalInvariant(format!("√({disc})")))?;
        let m1 = &(&tr + &root) * &half;
        let m2 = &(&tr - &root) * &half;
        let (big, small) = if m1.abs() >= m2.abs() { (m1, m2) } else { (m2, m1) };
        let lambda = &small / &big;
        let y3 = vec_scale(&z, &big.recip());
        let y1 = in_plane(eigenvector(&a, &big));
        let y2 = in_plane(eigenvector(&a, &small));
        return Ok(Classification {
            family: Family::G,
            lambda: Some(lambda),
            witness: witness_from([y1, y2, y3]),
        });
    }
    if disc.is_zero() {
        let mu = &tr * &half;
        let y3 = vec_scale(&z, &mu.recip());
        let scalar = a[0][1].is_zero() && a[1][0].is_zero() && a[0][0] == a[1][1];
        if scalar {
            return Ok(Classification {
                family: Family::G,
                lambda: Some(Rational::one()),
                witness: witness_from([d1, d2, y3]),
            });
        }
        // N = A/μ − I is nilpotent and nonzero: Y1 = N Y2
        let inv_mu = mu.recip();
        let n = |v: &[Rational; 2]| -> [Rational; 2] {
            let av = apply_a(v);
            [&(&av[0] * &inv_mu) - &v[0], &(&av[1] * &inv_mu) - &v[1]]
        };
        let e1 = [Rational::one(), Rational::zero()];
        let e2 = [Rational::zero(), Rational::one()];
        let y2 = if n(&e1).iter().any(|c| !c.is_zero()) { e1 } else { e2 };
        let y1 = n(&y2);
        return Ok(Classification {
            family: Family::C,
            lambda: None,
            witness: witness_from([in_plane(y1), in_plane(y2), y3]),
        });
    }
    // complex pair α ± iβ
    let alpha = &tr * &half;
    let beta_sq = &det - &(&alpha * &alpha);
    let beta = beta_sq
        .sqrt_exact()
        .ok_or_else(|| AlgebraError::IrrationalInvariant(format!("√({beta_sq})")))?;
    let sign = if alpha.is_negative() { Rational::from_int(-1) } else { Rational::one() };
    let scale = &sign / &beta;
    let lambda = &alpha.abs() / &beta;
    let y3 = vec_scale(&z, &scale);
    // Y2 = (A' − λ) Y1 with A' = sign·A/β; (A' − λ)² = −1 closes the pair
    let v1 = [Rational::one(), Rational::zero()];
    let av = apply_a(&v1);
    let v2 = [
        &(&av[0] * &scale) - &(&lambda * &v1[0]),
        &(&av[1] * &scale) - &(&lambda * &v1[1]),
    ];
    Ok(Classification {
        family: Family::L,
        lambda: Some(lambda),
        witness: witness_from([in_plane(v1), in_plane(v2), y3]),
    })
}

fn eigenvector(a: &[[Rational; 2]; 2], mu: &Rational) -> [Rational; 2] {
    if !a[0][1].is_zero() {
        [a[0][1].clone(), mu - &a[0][0]]
    } else if !a[1][0].is_zero() {
        [mu - &a[1][1], a[1][0].clone()]
    } else if a[0][0] == *mu {
        [Rational::one(), Rational::zero()]
    } else {
        [Rational::zero(), Rational::one()]
    }
}

/// Bound on integer coordinates tried when searching for a simple-algebra witness.
const SEARCH_RADIUS: i64 = 4;

fn simple(alg: &LieAlgebra3) -> Classification {
    let k = killing_form(alg);
    let m1 = k[0][0].clone();
    let m2 = &(&k[0][0] * &k[1][1]) - &(&k[0][1] * &k[1][0]);
    let m3 = LinearMap3 { rows: k }.det();
    let negative_definite = m1.is_negative() && m2.is_positive() && m3.is_negative();
    let family = if negative_definite { Family::Su2 } else { Family::Sl2 };
    Classification {
        family,
        lambda: None,
        witness: simple_witness(alg, family),
    }
}

/// `v·s` with `K(v s, v s) = target`, when `s` is rational.
fn normalize(alg: &LieAlgebra3, v: &Vec3, target: &Rational) -> Option<Vec3> {
    let kv = killing(alg, v, v);
    if kv.is_zero() {
        return None;
    }
    let s = (target / &kv).sqrt_exact()?;
    Some(vec_scale(v, &s))
}

fn small_vectors() -> impl Iterator<Item = Vec3> {
    let r = SEARCH_RADIUS;
    (-r..=r).flat_map(move |a| {
        (-r..=r).flat_map(move |b| {
            (-r..=r).map(move |c| [a, b, c].map(Rational::from_int))
        })
    })
    .filter(|v| !vec_is_zero(v))
}

fn simple_witness(alg: &LieAlgebra3, family: Family) -> Option<LinearMap3> {
    let canonical = family.default_instance();
    // X3 has K = −2 in both su2 and sl2; X1 has K = −2 in su2 and +2 in sl2
    let k3 = Rational::from_int(-2);
    let k1 = if family == Family::Su2 { Rational::from_int(-2) } else { Rational::from_int(2) };
    let sign2 = if family == Family::Su2 { Rational::one() } else { Rational::from_int(-1) };
    for v in small_vectors() {
        let Some(y3) = normalize(alg, &v, &k3) else { continue };
        let kcol: Vec3 = std::array::from_fn(|i| killing(alg, &basis_vec(i), &y3));
        let perp = nullspace(&[kcol]);
        if perp.len() != 2 {
            continue;
        }
        let r = SEARCH_RADIUS;
        for a in -r..=r {
            for b in -r..=r {
                let u = vec_add(
                    &vec_scale(&perp[0], &Rational::from_int(a)),
                    &vec_scale(&perp[1], &Rational::from_int(b)),
                );
                if vec_is_zero(&u) {
                    continue;
                }
                let Some(y1) = normalize(alg, &u, &k1) else { continue };
                let y2 = vec_scale(&bracket(alg, &y3, &y1), &sign2);
                if let Some(w) = witness_from([y1, y2, y3.clone()]) {
                    if verify_isomorphism(alg, &canonical, &w).is_ok_and(|r| r.is_zero()) {
                        return Some(w);
                    }
                }
            }
        }
    }
    None
}
