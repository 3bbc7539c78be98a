//! Directed systems, their elements and the inherited inner product.

use std::fmt;
use std::sync::Arc;

use num_complex::Complex64;
use serde::Serialize;

use super::DirectLimitError;

type Labels = Arc<dyn Fn(i64) -> Vec<i64> + Send + Sync>;

/// A directed system `{V_i, φ_ij}` over the integers `i ≥ first`. Each `V_i`
/// carries an orthonormal basis indexed by integer labels, and `φ_ij` sends
/// the basis vector with label `a` in `V_i` to the one with label `a` in
/// `V_j`, so it is an isometry whenever the labels of `V_i` occur in `V_j`.
#[derive(Clone)]
pub struct DirectedSystem {
    pub name: &'static str,
    pub first: i64,
    labels: Labels,
}

impl fmt::Debug for DirectedSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("DirectedSystem")
            .field("name", &self.name)
            .field("first", &self.first)
            .finish()
    }
}

/// Largest deviations from the directed-system axioms over a range of indices.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct AxiomReport {
    /// `φ_ii = id`.
    pub identity: f64,
    /// `φ_jk ∘ φ_ij = φ_ik`.
    pub composition: f64,
    /// `⟨φ_ij x, φ_ij y⟩ = ⟨x, y⟩` on basis pairs.
    pub isometry: f64,
}

impl AxiomReport {
    pub fn holds(&self) -> bool {
        self.identity == 0.0 && self.composition == 0.0 && self.isometry == 0.0
    }
}

impl DirectedSystem {
    /// Builds a system from the basis labels of each `V_i`.
    pub fn from_labels(
        name: &'static str,
        first: i64,
        labels: impl Fn(i64) -> Vec<i64> + Send + Sync + 'static,
    ) -> Self {
        DirectedSystem {
            name,
            first,
            labels: Arc::new(labels),
        }
    }

    /// `V_n = ℂⁿ` with the standard inner product; `φ_mn` pads with zeros.
    pub fn example1() -> Self {
        Self::from_labels("sequences", 1, |n| (0..n).collect())
    }

    /// `V_l = span{χ_l^m : |m| ≤ l}` with `φ_ij(χ_i^m) = χ_j^m`.
    pub fn su2_harmonics() -> Self {
        Self::from_labels("su2-harmonics", 0, |l| (-l..=l).collect())
    }

    pub fn labels(&self, i: i64) -> Result<Vec<i64>, DirectLimitError> {
        self.check_index(i)?;
        Ok((self.labels)(i))
    }

    pub fn dim(&self, i: i64) -> Result<usize, DirectLimitError> {
        Ok(self.labels(i)?.len())
    }

    fn check_index(&self, i: i64) -> Result<(), DirectLimitError> {
        if i < self.first {
            Err(DirectLimitError::IndexOutOfRange {
                index: i,
                first: self.first,
            })
        } else {
            Ok(())
        }
    }

    /// `φ_ij(x)` for `i ≤ j`.
    pub fn embed(&self, i: i64, j: i64, x: &[Complex64]) -> Result<Vec<Complex64>, DirectLimitError> {
        if j < i {
            return Err(DirectLimitError::NotUpward { from: i, to: j });
        }
        let from = self.labels(i)?;
        let to = self.labels(j)?;
        if x.len() != from.len() {
            return Err(DirectLimitError::DimensionMismatch {
                index: i,
                expected: from.len(),
                got: x.len(),
            });
        }
        let mut out = vec![Complex64::new(0.0, 0.0); to.len()];
        for (a, v) in from.iter().zip(x) {
            let pos = to.iter().position(|b| b == a).ok_or_else(|| {
                DirectLimitError::Domain(format!("label {a} of index {i} is missing at index {j}"))
            })?;
            out[pos] = *v;
        }
        Ok(out)
    }

    /// Checks the axioms on basis vectors for every `i ≤ j ≤ k` in `first..=last`.
    pub fn check_axioms(&self, last: i64) -> Result<AxiomReport, DirectLimitError> {
        let mut rep = AxiomReport {
            identity: 0.0,
            composition: 0.0,
            isometry: 0.0,
        };
        let basis = |i: i64, a: usize| -> Result<Vec<Complex64>, DirectLimitError> {
            let mut e = vec![Complex64::new(0.0, 0.0); self.dim(i)?];
            e[a] = Complex64::new(1.0, 0.0);
            Ok(e)
        };
        for i in self.first..=last {
            let d = self.dim(i)?;
            for a in 0..d {
                let e = basis(i, a)?;
                rep.identity = rep.identity.max(max_gap(&self.embed(i, i, &e)?, &e));
            }
            for j in i..=last {
                let images = (0..d)
                    .map(|a| self.embed(i, j, &basis(i, a)?))
                    .collect::<Result<Vec<_>, _>>()?;
                for a in 0..d {
                    for b in 0..d {
                        let want = if a == b { 1.0 } else { 0.0 };
                        let got = inner(&images[a], &images[b]);
                        rep.isometry = rep.isometry.max((got - want).norm());
                    }
                }
                for k in j..=last {
                    for (a, img) in images.iter().enumerate() {
                        let two = self.embed(j, k, img)?;
                        let one = self.embed(i, k, &basis(i, a)?)?;
                        rep.composition = rep.composition.max(max_gap(&two, &one));
                    }
                }
            }
        }
        Ok(rep)
    }
}

fn max_gap(a: &[Complex64], b: &[Complex64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| (x - y).norm()).fold(0.0, f64::max)
}

/// `Σ x̄ᵢ yᵢ`.
fn inner(x: &[Complex64], y: &[Complex64]) -> Complex64 {
    x.iter().zip(y).map(|(a, b)| a.conj() * b).sum()
}

/// A representative `x^i` of a class `[x^i]` in the direct limit.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DLVector {
    pub index: i64,
    pub coords: Vec<Complex64>,
}

impl DLVector {
    pub fn new(sys: &DirectedSystem, index: i64, coords: Vec<Complex64>) -> Result<Self, DirectLimitError> {
        let expected = sys.dim(index)?;
        if coords.len() != expected {
            return Err(DirectLimitError::DimensionMismatch {
                index,
                expected,
                got: coords.len(),
            });
        }
        Ok(DLVector { index, coords })
    }

    /// A vector of `ℂⁿ` in the sequence system, placed at index `n`.
    pub fn sequence(sys: &DirectedSystem, xs: &[f64]) -> Result<Self, DirectLimitError> {
        Self::new(
            sys,
            xs.len() as i64,
            xs.iter().map(|&x| Complex64::new(x, 0.0)).collect(),
        )
    }

    /// `φ_ik(x)` as a representative at index `k`.
    pub fn lift(&self, sys: &DirectedSystem, k: i64) -> Result<DLVector, DirectLimitError> {
        Ok(DLVector {
            index: k,
            coords: sys.embed(self.index, k, &self.coords)?,
        })
    }
}

/// `[a] = [b]`: both lifts agree at the common upper index `max(i, j)`.
pub fn dl_equal(a: &DLVector, b: &DLVector, sys: &DirectedSystem) -> Result<bool, DirectLimitError> {
    let k = a.index.max(b.index);
    Ok(a.lift(sys, k)?.coords == b.lift(sys, k)?.coords)
}

/// `⟨[a], [b]⟩`, antilinear in `a`, computed at `max(i, j)`.
pub fn dl_inner(a: &DLVector, b: &DLVector, sys: &DirectedSystem) -> Result<Complex64, DirectLimitError> {
    dl_inner_at(a, b, sys, a.index.max(b.index))
}

/// `⟨φ_ik a, φ_jk b⟩_k` for any common upper index `k`.
pub fn dl_inner_at(
    a: &DLVector,
    b: &DLVector,
    sys: &DirectedSystem,
    k: i64,
) -> Result<Complex64, DirectLimitError> {
    if k < a.index || k < b.index {
        return Err(DirectLimitError::NotUpward {
            from: a.index.max(b.index),
            to: k,
        });
    }
    Ok(inner(&a.lift(sys, k)?.coords, &b.lift(sys, k)?.coords))
}

/// `[a] + [b]`, represented at `max(i, j)`.
pub fn dl_add(a: &DLVector, b: &DLVector, sys: &DirectedSystem) -> Result<DLVector, DirectLimitError> {
    let k = a.index.max(b.index);
    let (x, y) = (a.lift(sys, k)?, b.lift(sys, k)?);
    Ok(DLVector {
        index: k,
        coords: x.coords.iter().zip(&y.coords).map(|(p, q)| p + q).collect(),
    })
}

/// `α[a] = [αa]`.
pub fn dl_scale(alpha: Complex64, a: &DLVector) -> DLVector {
    DLVector {
        index: a.index,
        coords: a.coords.iter().map(|x| alpha * x).collect(),
    }
}
