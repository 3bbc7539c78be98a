//! 3-vectors and 3×3 matrices over the rationals.

use std::fmt;

use serde::{Deserialize, Serialize};

use super::rational::Rational;

pub type Vec3 = [Rational; 3];

pub fn zero_vec() -> Vec3 {
    [Rational::zero(), Rational::zero(), Rational::zero()]
}

pub fn basis_vec(i: usize) -> Vec3 {
    let mut v = zero_vec();
    v[i] = Rational::one();
    v
}

pub fn vec_from_ints(v: [i64; 3]) -> Vec3 {
    v.map(Rational::from_int)
}

pub fn vec_add(a: &Vec3, b: &Vec3) -> Vec3 {
    [&a[0] + &b[0], &a[1] + &b[1], &a[2] + &b[2]]
}

pub fn vec_sub(a: &Vec3, b: &Vec3) -> Vec3 {
    [&a[0] - &b[0], &a[1] - &b[1], &a[2] - &b[2]]
}

pub fn vec_scale(a: &Vec3, c: &Rational) -> Vec3 {
    [&a[0] * c, &a[1] * c, &a[2] * c]
}

pub fn vec_is_zero(a: &Vec3) -> bool {
    a.iter().all(Rational::is_zero)
}

pub fn vec_max_abs(a: &Vec3) -> Rational {
    a.iter().map(Rational::abs).max().unwrap_or_else(Rational::zero)
}

pub fn vec_to_f64(a: &Vec3) -> [f64; 3] {
    [a[0].to_f64(), a[1].to_f64(), a[2].to_f64()]
}

/// Linear map of the underlying 3-space; `rows[r][c]` is the `r`-th coordinate
/// of the image of basis vector `c`.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct LinearMap3 {
    pub rows: [[Rational; 3]; 3],
}

impl LinearMap3 {
    pub fn identity() -> Self {
        Self::from_columns([basis_vec(0), basis_vec(1), basis_vec(2)])
    }

    pub fn from_columns(cols: [Vec3; 3]) -> Self {
        let rows = std::array::from_fn(|r| std::array::from_fn(|c| cols[c][r].clone()));
        LinearMap3 { rows }
    }

    pub fn from_int_rows(rows: [[i64; 3]; 3]) -> Self {
        LinearMap3 {
            rows: rows.map(|r| r.map(Rational::from_int)),
        }
    }

    pub fn column(&self, c: usize) -> Vec3 {
        std::array::from_fn(|r| self.rows[r][c].clone())
    }

    pub fn apply(&self, v: &Vec3) -> Vec3 {
        std::array::from_fn(|r| {
            let mut acc = Rational::zero();
            for c in 0..3 {
                acc += &(&self.rows[r][c] * &v[c]);
            }
            acc
        })
    }

    pub fn compose(&self, rhs: &LinearMap3) -> LinearMap3 {
        let cols = std::array::from_fn(|c| self.apply(&rhs.column(c)));
        LinearMap3::from_columns(cols)
    }

    pub fn det(&self) -> Rational {
        let m = &self.rows;
        let t1 = &m[0][0] * &(&(&m[1][1] * &m[2][2]) - &(&m[1][2] * &m[2][1]));
        let t2 = &m[0][1] * &(&(&m[1][0] * &m[2][2]) - &(&m[1][2] * &m[2][0]));
        let t3 = &m[0][2] * &(&(&m[1][0] * &m[2][1]) - &(&m[1][1] * &m[2][0]));
        &(&t1 - &t2) + &t3
    }

    pub fn inverse(&self) -> Option<LinearMap3> {
        let det = self.det();
        if det.is_zero() {
            return None;
        }
        let m = &self.rows;
        let cof = |r0: usize, r1: usize, c0: usize, c1: usize| {
            &(&m[r0][c0] * &m[r1][c1]) - &(&m[r0][c1] * &m[r1][c0])
        };
        // adjugate = transpose of the cofactor matrix
        let adj = [
            [cof(1, 2, 1, 2), -cof(0, 2, 1, 2), cof(0, 1, 1, 2)],
            [-cof(1, 2, 0, 2), cof(0, 2, 0, 2), -cof(0, 1, 0, 2)],
            [cof(1, 2, 0, 1), -cof(0, 2, 0, 1), cof(0, 1, 0, 1)],
        ];
        let inv_det = det.recip();
        Some(LinearMap3 {
            rows: adj.map(|row| row.map(|x| &x * &inv_det)),
        })
    }

    pub fn is_invertible(&self) -> bool {
        !self.det().is_zero()
    }
}

impl fmt::Debug for LinearMap3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, row) in self.rows.iter().enumerate() {
            if i > 0 {
                write!(f, "; ")?;
            }
            write!(f, "{} {} {}", row[0], row[1], row[2])?;
        }
        write!(f, "]")
    }
}

/// Rank of a set of rational vectors (Gaussian elimination).
pub fn rank(vectors: &[Vec3]) -> usize {
    row_reduce(vectors).len()
}

/// Returns a row-echelon basis of the span of `vectors`.
pub fn row_reduce(vectors: &[Vec3]) -> Vec<Vec3> {
    let mut rows: Vec<Vec3> = vectors.iter().filter(|v| !vec_is_zero(v)).cloned().collect();
    let mut basis = Vec::new();
    for col in 0..3 {
        let Some(p) = rows.iter().position(|r| !r[col].is_zero()) else {
            continue;
        };
        let pivot = rows.swap_remove(p);
        let pv = pivot[col].clone();
        rows = rows
            .into_iter()
            .map(|r| {
                let f = &r[col] / &pv;
                vec_sub(&r, &vec_scale(&pivot, &f))
            })
            .filter(|r| !vec_is_zero(r))
            .collect();
        basis.push(pivot);
    }
    basis
}

/// Basis of `{x : r·x = 0 for every row r}`.
pub fn nullspace(rows: &[Vec3]) -> Vec<Vec3> {
    // reduced row echelon form
    let mut m: Vec<Vec3> = rows.to_vec();
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..3 {
        let Some(p) = (r..m.len()).find(|&i| !m[i][col].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let pv = m[r][col].recip();
        m[r] = vec_scale(&m[r], &pv);
        for i in 0..m.len() {
            if i != r && !m[i][col].is_zero() {
                let f = m[i][col].clone();
                m[i] = vec_sub(&m[i], &vec_scale(&m[r], &f));
            }
        }
        pivots.push(col);
        r += 1;
    }
    let free: Vec<usize> = (0..3).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut x = basis_vec(f);
            for (row, &pc) in pivots.iter().enumerate() {
                x[pc] = -&m[row][f];
            }
            x
        })
        .collect()
}

/// Coordinates of `w` in the basis given by the columns of `b`.
pub fn coordinates(b: &LinearMap3, w: &Vec3) -> Option<Vec3> {
    b.inverse().map(|inv| inv.apply(w))
}

pub fn dot(a: &Vec3, b: &Vec3) -> Rational {
    let mut acc = Rational::zero();
    for i in 0..3 {
        acc += &(&a[i] * &b[i]);
    }
    acc
}
