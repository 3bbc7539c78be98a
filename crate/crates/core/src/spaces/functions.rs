//! Test functions with exact derivatives.

use std::fmt;
use std::sync::Arc;

use num_complex::Complex64;

use crate::jet::{EvalError, Jet};

use super::harmonics::DeformedHarmonic;

/// Where a function may be nonzero. For one-dimensional functions only the
/// first coordinate is meaningful.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Support {
    Unbounded,
    Bounded { lo: [f64; 2], hi: [f64; 2] },
}

impl Support {
    pub fn interval(a: f64, b: f64) -> Self {
        Support::Bounded {
            lo: [a, f64::NEG_INFINITY],
            hi: [b, f64::INFINITY],
        }
    }

    pub fn rect(lo: [f64; 2], hi: [f64; 2]) -> Self {
        Support::Bounded { lo, hi }
    }

    pub fn contains(&self, p: [f64; 2]) -> bool {
        match self {
            Support::Unbounded => true,
            Support::Bounded { lo, hi } => (0..2).all(|k| p[k] >= lo[k] && p[k] <= hi[k]),
        }
    }

    pub fn intersect(&self, other: &Support) -> Support {
        match (self, other) {
            (Support::Unbounded, s) | (s, Support::Unbounded) => *s,
            (Support::Bounded { lo: a, hi: b }, Support::Bounded { lo: c, hi: d }) => Support::Bounded {
                lo: [a[0].max(c[0]), a[1].max(c[1])],
                hi: [b[0].min(d[0]), b[1].min(d[1])],
            },
        }
    }

    /// Smallest box containing both.
    pub fn hull(&self, other: &Support) -> Support {
        match (self, other) {
            (Support::Unbounded, _) | (_, Support::Unbounded) => Support::Unbounded,
            (Support::Bounded { lo: a, hi: b }, Support::Bounded { lo: c, hi: d }) => Support::Bounded {
                lo: [a[0].min(c[0]), a[1].min(c[1])],
                hi: [b[0].max(d[0]), b[1].max(d[1])],
            },
        }
    }
}

/// A smooth function of one or two variables, evaluable with exact
/// derivatives through its jet.
pub trait TestFunction: Send + Sync {
    fn dim(&self) -> usize;

    fn support(&self) -> Support;

    /// Taylor jet of the given order at `p` (second coordinate ignored in 1-D).
    fn jet(&self, p: [f64; 2], order: usize) -> Result<Jet, EvalError>;

    fn describe(&self) -> String;

    fn value(&self, p: [f64; 2]) -> Result<Complex64, EvalError> {
        Ok(self.jet(p, 0)?.value())
    }

    fn gradient(&self, p: [f64; 2]) -> Result<[Complex64; 2], EvalError> {
        let j = self.jet(p, 1)?;
        Ok([j.derivative(1, 0), j.derivative(0, 1)])
    }

    fn hessian(&self, p: [f64; 2]) -> Result<[[Complex64; 2]; 2], EvalError> {
        let j = self.jet(p, 2)?;
        let xy = j.derivative(1, 1);
        Ok([[j.derivative(2, 0), xy], [xy, j.derivative(0, 2)]])
    }

    fn as_harmonic(&self) -> Option<&DeformedHarmonic> {
        None
    }
}

pub type Func = Arc<dyn TestFunction>;

impl fmt::Debug for dyn TestFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.describe())
    }
}

type JetFn = dyn Fn([Jet; 2]) -> Result<Jet, EvalError> + Send + Sync;

/// A function given by jet arithmetic on the coordinates, cut off outside
/// its declared support.
pub struct AnalyticFn {
    dim: usize,
    support: Support,
    name: String,
    f: Box<JetFn>,
}

impl AnalyticFn {
    pub fn new<F>(dim: usize, support: Support, name: impl Into<String>, f: F) -> Self
    where
        F: Fn([Jet; 2]) -> Result<Jet, EvalError> + Send + Sync + 'static,
    {
        AnalyticFn {
            dim,
            support,
            name: name.into(),
            f: Box::new(f),
        }
    }

    pub fn into_func(self) -> Func {
        Arc::new(self)
    }
}

impl TestFunction for AnalyticFn {
    fn dim(&self) -> usize {
        self.dim
    }

    fn support(&self) -> Support {
        self.support
    }

    fn jet(&self, p: [f64; 2], order: usize) -> Result<Jet, EvalError> {
        if order > crate::jet::MAX_ORDER {
            return Err(EvalError::OrderTooHigh(order));
        }
        if !self.support.contains(p) {
            return Ok(Jet::zero(order));
        }
        (self.f)(Jet::point(p, order))
    }

    fn describe(&self) -> String {
        self.name.clone()
    }
}

/// `exp(−1/(1−u²))` with `u = (x − c)/r`, as a jet. Where `1/(1−u²)`
/// exceeds 700 the function and all its derivatives are below double
/// precision and the zero jet is returned.
fn bump_profile(x: Jet, center: f64, radius: f64) -> Result<Jet, EvalError> {
    let u = (x - Jet::real(center, x.order())).scale_real(1.0 / radius);
    let u0 = u.value().re;
    if u0.abs() >= 1.0 {
        return Ok(Jet::zero(x.order()));
    }
    let w = Jet::real(1.0, x.order()) - u * u;
    if 1.0 / w.value().re > 700.0 {
        return Ok(Jet::zero(x.order()));
    }
    Ok((-w.recip()?).exp())
}

/// One-dimensional bump supported on `[center − radius, center + radius]`.
pub fn bump(center: f64, radius: f64) -> Func {
    assert!(radius > 0.0, "bump radius must be positive");
    AnalyticFn::new(
        1,
        Support::interval(center - radius, center + radius),
        format!("bump({center}, {radius})"),
        move |[x, _]| bump_profile(x, center, radius),
    )
    .into_func()
}

/// Product of bumps in each coordinate.
pub fn bump2(center: [f64; 2], radius: [f64; 2]) -> Func {
    assert!(radius[0] > 0.0 && radius[1] > 0.0, "bump radius must be positive");
    AnalyticFn::new(
        2,
        Support::rect(
            [center[0] - radius[0], center[1] - radius[1]],
            [center[0] + radius[0], center[1] + radius[1]],
        ),
        format!("bump2({:?}, {:?})", center, radius),
        move |[x, y]| Ok(bump_profile(x, center[0], radius[0])? * bump_profile(y, center[1], radius[1])?),
    )
    .into_func()
}

/// `Σ c_k f_k`.
pub struct LinComb {
    pub terms: Vec<(Complex64, Func)>,
}

impl LinComb {
    pub fn new(terms: Vec<(Complex64, Func)>) -> Self {
        LinComb { terms }
    }

    pub fn into_func(self) -> Func {
        Arc::new(self)
    }
}

impl TestFunction for LinComb {
    fn dim(&self) -> usize {
        self.terms.iter().map(|(_, f)| f.dim()).max().unwrap_or(1)
    }

    fn support(&self) -> Support {
        let mut it = self.terms.iter();
        match it.next() {
            None => Support::rect([0.0; 2], [0.0; 2]),
            Some((_, f)) => it.fold(f.support(), |s, (_, g)| s.hull(&g.support())),
        }
    }

    fn jet(&self, p: [f64; 2], order: usize) -> Result<Jet, EvalError> {
        let mut acc = Jet::zero(order);
        for (c, f) in &self.terms {
            acc = acc + f.jet(p, order)?.scale(*c);
        }
        Ok(acc)
    }

    fn describe(&self) -> String {
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(c, f)| format!("({c})·{}", f.describe()))
            .collect();
        parts.join(" + ")
    }
}

/// `f` on `[a, b]` and exactly zero outside.
pub struct ZeroExtended {
    pub inner: Func,
    pub from: (f64, f64),
}

impl TestFunction for ZeroExtended {
    fn dim(&self) -> usize {
        1
    }

    fn support(&self) -> Support {
        self.inner.support().intersect(&Support::interval(self.from.0, self.from.1))
    }

    fn jet(&self, p: [f64; 2], order: usize) -> Result<Jet, EvalError> {
        if p[0] < self.from.0 || p[0] > self.from.1 {
            Ok(Jet::zero(order))
        } else {
            self.inner.jet(p, order)
        }
    }

    fn describe(&self) -> String {
        format!("ext[{}, {}]({})", self.from.0, self.from.1, self.inner.describe())
    }
}
