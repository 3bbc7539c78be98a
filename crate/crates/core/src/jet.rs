//! Truncated bivariate Taylor polynomials ("jets") with complex coefficients.
//!
//! A jet of order `n` at a point stores the coefficients of `h1^i h2^j`,
//! `i + j ≤ n`, of a function expanded around that point. Arithmetic on jets
//! is arithmetic on the underlying functions, so derivatives of products and
//! compositions come out exactly (up to roundoff) without finite differences.

use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex64;

pub const MAX_ORDER: usize = 6;
const N: usize = MAX_ORDER + 1;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum EvalError {
    #[error("singular point: {0}")]
    SingularPoint(String),
    #[error("jet order {0} exceeds the maximum {MAX_ORDER}")]
    OrderTooHigh(usize),
    #[error("{0}")]
    Special(#[from] crate::special::SpecialError),
}

#[derive(Clone, Copy, PartialEq)]
pub struct Jet {
    order: usize,
    c: [[Complex64; N]; N],
}

impl std::fmt::Debug for Jet {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Jet(order {}, value {})", self.order, self.value())
    }
}

fn zero_c() -> Complex64 {
    Complex64::new(0.0, 0.0)
}

impl Jet {
    pub fn zero(order: usize) -> Self {
        assert!(order <= MAX_ORDER, "jet order {order} exceeds {MAX_ORDER}");
        Jet {
            order,
            c: [[zero_c(); N]; N],
        }
    }

    pub fn constant(v: Complex64, order: usize) -> Self {
        let mut j = Self::zero(order);
        j.c[0][0] = v;
        j
    }

    pub fn real(v: f64, order: usize) -> Self {
        Self::constant(Complex64::new(v, 0.0), order)
    }

    /// The coordinate function `x_k` around `x0`.
    pub fn variable(k: usize, x0: f64, order: usize) -> Self {
        let mut j = Self::real(x0, order);
        if order >= 1 {
            if k == 0 {
                j.c[1][0] = Complex64::new(1.0, 0.0);
            } else {
                j.c[0][1] = Complex64::new(1.0, 0.0);
            }
        }
        j
    }

    /// Coordinate jets `(x, y)` at `p`.
    pub fn point(p: [f64; 2], order: usize) -> [Jet; 2] {
        [Self::variable(0, p[0], order), Self::variable(1, p[1], order)]
    }

    /// Separable jet `Σ a_i b_j h1^i h2^j` from univariate Taylor coefficients.
    pub fn from_product(a: &[Complex64], b: &[Complex64], order: usize) -> Self {
        let mut j = Self::zero(order);
        for i in 0..=order.min(a.len().saturating_sub(1)) {
            for k in 0..=(order - i).min(b.len().saturating_sub(1)) {
                j.c[i][k] = a[i] * b[k];
            }
        }
        j
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn value(&self) -> Complex64 {
        self.c[0][0]
    }

    pub fn coeff(&self, i: usize, j: usize) -> Complex64 {
        if i + j <= self.order {
            self.c[i][j]
        } else {
            zero_c()
        }
    }

    /// `∂^{i+j} f / ∂x^i ∂y^j` at the expansion point.
    pub fn derivative(&self, i: usize, j: usize) -> Complex64 {
        self.coeff(i, j) * (factorial(i) * factorial(j))
    }

    pub fn is_zero(&self) -> bool {
        self.terms().all(|(_, _, v)| v == zero_c())
    }

    fn terms(&self) -> impl Iterator<Item = (usize, usize, Complex64)> + '_ {
        (0..=self.order).flat_map(move |i| (0..=self.order - i).map(move |j| (i, j, self.c[i][j])))
    }

    pub fn truncate(&self, order: usize) -> Self {
        let order = order.min(self.order);
        let mut out = Self::zero(order);
        for (i, j, v) in self.terms() {
            if i + j <= order {
                out.c[i][j] = v;
            }
        }
        out
    }

    pub fn scale(&self, s: Complex64) -> Self {
        let mut out = *self;
        for i in 0..=self.order {
            for j in 0..=(self.order - i) {
                out.c[i][j] *= s;
            }
        }
        out
    }

    pub fn scale_real(&self, s: f64) -> Self {
        self.scale(Complex64::new(s, 0.0))
    }

    /// `∂/∂x_k`; the result has order one less.
    pub fn partial(&self, k: usize) -> Self {
        assert!(self.order >= 1, "cannot differentiate an order-0 jet");
        let mut out = Self::zero(self.order - 1);
        for i in 0..=out.order {
            for j in 0..=(out.order - i) {
                out.c[i][j] = if k == 0 {
                    self.c[i + 1][j] * (i + 1) as f64
                } else {
                    self.c[i][j + 1] * (j + 1) as f64
                };
            }
        }
        out
    }

    /// `∂^α` for a multi-index.
    pub fn partial_multi(&self, alpha: [usize; 2]) -> Self {
        let mut out = *self;
        for _ in 0..alpha[0] {
            out = out.partial(0);
        }
        for _ in 0..alpha[1] {
            out = out.partial(1);
        }
        out
    }

    /// `f ∘ self` where `coeffs[k] = f^{(k)}(a0)/k!` at `a0 = self.value()`.
    pub fn compose(&self, coeffs: &[Complex64]) -> Self {
        let mut d = *self;
        d.c[0][0] = zero_c();
        let mut out = Self::constant(coeffs[0], self.order);
        let mut pow = Self::constant(Complex64::new(1.0, 0.0), self.order);
        for ck in coeffs.iter().take(self.order + 1).skip(1) {
            pow = pow * d;
            out = out + pow.scale(*ck);
        }
        out
    }

    pub fn exp(&self) -> Self {
        let e = self.value().exp();
        let coeffs: Vec<Complex64> = (0..=self.order).map(|k| e / factorial(k)).collect();
        self.compose(&coeffs)
    }

    pub fn sin(&self) -> Self {
        let a = self.value();
        let coeffs: Vec<Complex64> = (0..=self.order)
            .map(|k| sin_shift(a, k) / factorial(k))
            .collect();
        self.compose(&coeffs)
    }

    pub fn cos(&self) -> Self {
        let a = self.value();
        let coeffs: Vec<Complex64> = (0..=self.order)
            .map(|k| sin_shift(a, k + 1) / factorial(k))
            .collect();
        self.compose(&coeffs)
    }

    /// `1/self`; fails where the value vanishes.
    pub fn recip(&self) -> Result<Self, EvalError> {
        let a = self.value();
        if a.norm() < 1e-300 {
            return Err(EvalError::SingularPoint("division by zero".into()));
        }
        let inv = 1.0 / a;
        let mut coeffs = Vec::with_capacity(self.order + 1);
        let mut p = inv;
        for _ in 0..=self.order {
            coeffs.push(p);
            p *= -inv;
        }
        Ok(self.compose(&coeffs))
    }

    /// `cot(self)`; fails at multiples of π.
    pub fn cot(&self) -> Result<Self, EvalError> {
        let s = self.sin();
        if s.value().norm() < 1e-14 {
            return Err(EvalError::SingularPoint(format!(
                "cot at {}",
                self.value().re
            )));
        }
        Ok(self.cos() * s.recip()?)
    }

    pub fn powi(&self, n: u32) -> Self {
        let mut out = Self::constant(Complex64::new(1.0, 0.0), self.order);
        for _ in 0..n {
            out = out * *self;
        }
        out
    }
}

fn sin_shift(a: Complex64, k: usize) -> Complex64 {
    // sin^{(k)}(a) = sin(a + kπ/2)
    match k % 4 {
        0 => a.sin(),
        1 => a.cos(),
        2 => -a.sin(),
        _ => -a.cos(),
    }
}

pub fn factorial(k: usize) -> f64 {
    (1..=k).fold(1.0, |acc, i| acc * i as f64)
}

impl Add for Jet {
    type Output = Jet;
    fn add(self, rhs: Jet) -> Jet {
        let order = self.order.min(rhs.order);
        let mut out = Jet::zero(order);
        for i in 0..=order {
            for j in 0..=(order - i) {
                out.c[i][j] = self.c[i][j] + rhs.c[i][j];
            }
        }
        out
    }
}

impl Sub for Jet {
    type Output = Jet;
    fn sub(self, rhs: Jet) -> Jet {
        self + (-rhs)
    }
}

impl Neg for Jet {
    type Output = Jet;
    fn neg(self) -> Jet {
        self.scale_real(-1.0)
    }
}

impl Mul for Jet {
    type Output = Jet;
    fn mul(self, rhs: Jet) -> Jet {
        let order = self.order.min(rhs.order);
        let mut out = Jet::zero(order);
        for i1 in 0..=order {
            for j1 in 0..=(order - i1) {
                let a = self.c[i1][j1];
                if a == zero_c() {
                    continue;
                }
                for i2 in 0..=(order - i1 - j1) {
                    for j2 in 0..=(order - i1 - j1 - i2) {
                        out.c[i1 + i2][j1 + j2] += a * rhs.c[i2][j2];
                    }
                }
            }
        }
        out
    }
}

impl Mul<Complex64> for Jet {
    type Output = Jet;
    fn mul(self, rhs: Complex64) -> Jet {
        self.scale(rhs)
    }
}

impl Mul<f64> for Jet {
    type Output = Jet;
    fn mul(self, rhs: f64) -> Jet {
        self.scale_real(rhs)
    }
}
