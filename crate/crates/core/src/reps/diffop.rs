//! Linear differential operators with smooth coefficients, acting on test
//! functions through their jets.

use std::fmt;
use std::sync::Arc;

use num_complex::Complex64;

use crate::algebra::{lie::bracket, linear::basis_vec, linear::vec_to_f64, LieAlgebra3};
use crate::jet::{EvalError, Jet, MAX_ORDER};
use crate::spaces::{Func, FunctionSpace, Support, TestFunction};

use super::RepError;

pub type Coeff = Arc<dyn Fn([Jet; 2]) -> Result<Jet, EvalError> + Send + Sync>;

/// `coeff(p) · ∂^alpha`.
#[derive(Clone)]
pub struct Term {
    pub coeff: Coeff,
    pub alpha: [usize; 2],
    pub label: String,
}

#[derive(Clone, Default)]
pub struct DiffOp {
    pub terms: Vec<Term>,
}

impl fmt::Debug for DiffOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.describe())
    }
}

fn alpha_label(alpha: [usize; 2]) -> String {
    let mut s = String::new();
    for (k, name) in [(alpha[0], "d1"), (alpha[1], "d2")] {
        match k {
            0 => {}
            1 => s.push_str(name),
            _ => s.push_str(&format!("{name}^{k}")),
        }
    }
    s
}

impl DiffOp {
    pub fn zero() -> Self {
        DiffOp { terms: Vec::new() }
    }

    /// Adds `coeff · ∂^alpha`.
    pub fn term<F>(mut self, label: impl Into<String>, alpha: [usize; 2], coeff: F) -> Self
    where
        F: Fn([Jet; 2]) -> Result<Jet, EvalError> + Send + Sync + 'static,
    {
        assert!(alpha[0] + alpha[1] <= 2, "operators have order at most 2");
        self.terms.push(Term {
            coeff: Arc::new(coeff),
            alpha,
            label: label.into(),
        });
        self
    }

    /// Adds `c · ∂^alpha` with a constant coefficient.
    pub fn constant(self, c: Complex64, alpha: [usize; 2]) -> Self {
        self.term(format!("{c}"), alpha, move |[x, _]| Ok(Jet::constant(c, x.order())))
    }

    pub fn order(&self) -> usize {
        self.terms.iter().map(|t| t.alpha[0] + t.alpha[1]).max().unwrap_or(0)
    }

    pub fn scaled(&self, s: Complex64) -> DiffOp {
        DiffOp {
            terms: self
                .terms
                .iter()
                .map(|t| {
                    let c = t.coeff.clone();
                    Term {
                        coeff: Arc::new(move |p: [Jet; 2]| Ok(c(p)? * s)),
                        alpha: t.alpha,
                        label: format!("({s})·{}", t.label),
                    }
                })
                .collect(),
        }
    }

    pub fn plus(mut self, other: &DiffOp) -> DiffOp {
        self.terms.extend(other.terms.iter().cloned());
        self
    }

    /// `Σ c_k op_k`, skipping zero weights.
    pub fn combination(parts: &[(f64, &DiffOp)]) -> DiffOp {
        parts
            .iter()
            .filter(|(c, _)| *c != 0.0)
            .fold(DiffOp::zero(), |acc, (c, op)| acc.plus(&op.scaled(Complex64::new(*c, 0.0))))
    }

    pub fn describe(&self) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        self.terms
            .iter()
            .map(|t| {
                let d = alpha_label(t.alpha);
                if d.is_empty() {
                    t.label.clone()
                } else {
                    format!("{}·{d}", t.label)
                }
            })
            .collect::<Vec<_>>()
            .join(" + ")
    }

    /// `(op f)` as a jet of the given order at `p`.
    pub fn apply_jet(&self, f: &dyn TestFunction, p: [f64; 2], order: usize) -> Result<Jet, EvalError> {
        let need = order + self.order();
        if need > MAX_ORDER {
            return Err(EvalError::OrderTooHigh(need));
        }
        let mut acc = Jet::zero(order);
        if self.terms.is_empty() || !f.support().contains(p) {
            return Ok(acc);
        }
        let fj = f.jet(p, need)?;
        let pt = Jet::point(p, order);
        for t in &self.terms {
            let c = (t.coeff)(pt)?;
            let d = fj.partial_multi(t.alpha).truncate(order);
            acc = acc + c * d;
        }
        Ok(acc)
    }
}

/// `op f`, itself a test function so that operators compose.
struct Applied {
    op: DiffOp,
    f: Func,
}

impl TestFunction for Applied {
    fn dim(&self) -> usize {
        self.f.dim()
    }

    fn support(&self) -> Support {
        self.f.support()
    }

    fn jet(&self, p: [f64; 2], order: usize) -> Result<Jet, EvalError> {
        self.op.apply_jet(self.f.as_ref(), p, order)
    }

    fn describe(&self) -> String {
        format!("[{}]({})", self.op.describe(), self.f.describe())
    }
}

pub fn apply(op: &DiffOp, f: &Func) -> Func {
    Arc::new(Applied {
        op: op.clone(),
        f: f.clone(),
    })
}

/// A representation of a three-dimensional Lie algebra by differential
/// operators: `assign[k]` is the image of the k-th basis vector.
#[derive(Clone, Debug)]
pub struct RepRealization {
    pub name: String,
    pub algebra: LieAlgebra3,
    pub space: FunctionSpace,
    pub assign: [DiffOp; 3],
}

impl RepRealization {
    /// Image of `Σ v_k X_k`.
    pub fn op(&self, v: [f64; 3]) -> DiffOp {
        DiffOp::combination(&[
            (v[0], &self.assign[0]),
            (v[1], &self.assign[1]),
            (v[2], &self.assign[2]),
        ])
    }
}

/// `max |([ρ(X_i), ρ(X_j)] − ρ([X_i, X_j])) f (p)|` over basis pairs, probes
/// and grid points.
pub fn commutator_residual(
    rep: &RepRealization,
    probes: &[Func],
    grid: &[[f64; 2]],
) -> Result<f64, RepError> {
    let mut worst: f64 = 0.0;
    for (i, j) in [(0, 1), (0, 2), (1, 2)] {
        let w = vec_to_f64(&bracket(&rep.algebra, &basis_vec(i), &basis_vec(j)));
        let rhs = rep.op(w);
        for f in probes {
            let ij = apply(&rep.assign[i], &apply(&rep.assign[j], f));
            let ji = apply(&rep.assign[j], &apply(&rep.assign[i], f));
            let k = apply(&rhs, f);
            for &p in grid {
                let r = ij.value(p)? - ji.value(p)? - k.value(p)?;
                worst = worst.max(r.norm());
            }
        }
    }
    Ok(worst)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spaces::bump;

    fn i() -> Complex64 {
        Complex64::new(0.0, 1.0)
    }

    #[test]
    fn derivative_of_even_bump_vanishes_at_center() {
        let d = DiffOp::zero().constant(Complex64::new(1.0, 0.0), [1, 0]);
        let v = apply(&d, &bump(0.0, 1.0)).value([0.0, 0.0]).unwrap();
        assert!(v.norm() < 1e-16);
    }

    #[test]
    fn multiplication_operator() {
        let a = 1.5;
        let m = DiffOp::zero().term("iAx", [0, 0], move |[x, _]| Ok(x * (i() * a)));
        let f = bump(0.0, 1.0);
        let x = 0.4;
        let got = apply(&m, &f).value([x, 0.0]).unwrap();
        let want = i() * a * x * f.value([x, 0.0]).unwrap();
        assert!((got - want).norm() < 1e-16);
    }

    #[test]
    fn second_order_term() {
        let op = DiffOp::zero().term("x", [2, 0], |[x, _]| Ok(x));
        let f = bump(0.5, 0.2);
        let got = apply(&op, &f).value([0.5, 0.0]).unwrap();
        let want = 0.5 * f.hessian([0.5, 0.0]).unwrap()[0][0];
        assert!((got - want).norm() < 1e-14);
    }

    #[test]
    fn composition_needs_enough_jet_order() {
        let d2 = DiffOp::zero().constant(Complex64::new(1.0, 0.0), [2, 0]);
        let f = bump(0.0, 1.0);
        let g = apply(&d2, &apply(&d2, &apply(&d2, &apply(&d2, &f))));
        assert!(matches!(g.value([0.1, 0.0]), Err(EvalError::OrderTooHigh(_))));
    }
}
