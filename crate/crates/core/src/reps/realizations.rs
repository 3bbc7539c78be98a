//! The concrete operator realizations: each source family already
//! intertwined with the rescaling `x ↦ εx`, and each limit representation.

use num_complex::Complex64;

use crate::algebra::{Family, LieAlgebra3, Rational};
use crate::jet::{Jet, EvalError};
use crate::spaces::FunctionSpace;

use super::diffop::{DiffOp, RepRealization};
use super::RepError;

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

fn d(scale: f64) -> DiffOp {
    DiffOp::zero().constant(c(scale, 0.0), [1, 0])
}

fn mult<F>(label: String, f: F) -> DiffOp
where
    F: Fn(Jet) -> Result<Jet, EvalError> + Send + Sync + 'static,
{
    DiffOp::zero().term(label, [0, 0], move |[x, _]| f(x))
}

fn family(f: Family, lambda: Option<Rational>) -> LieAlgebra3 {
    f.instance(lambda).expect("catalog instance")
}

fn rep(name: String, algebra: LieAlgebra3, space: FunctionSpace, assign: [DiffOp; 3]) -> RepRealization {
    RepRealization {
        name,
        algebra,
        space,
        assign,
    }
}

/// ea on `L²(ℝ)`: `X1 ↦ ib e^{−εx}`, `X2 ↦ ia`, `X3 ↦ −(1/ε) d/dx`.
pub fn ea_rep(a: f64, b: f64, eps: f64) -> RepRealization {
    rep(
        format!("ea(a={a}, b={b}, eps={eps})"),
        family(Family::Ea, None),
        FunctionSpace::l2_real_line(),
        [
            mult(format!("i{b}·exp(-{eps}x)"), move |x| Ok((x * -eps).exp() * c(0.0, b))),
            DiffOp::zero().constant(c(0.0, a), [0, 0]),
            d(-1.0 / eps),
        ],
    )
}

/// iso(2) = l(0): `X1 ↦ i(r1 sin εx + r2 cos εx)`, `X2 ↦ i(r1 cos εx − r2 sin εx)`,
/// `X3 ↦ (1/ε) d/dx`.
pub fn iso2_rep(r1: f64, r2: f64, eps: f64, space: FunctionSpace) -> RepRealization {
    rep(
        format!("iso2(r1={r1}, r2={r2}, eps={eps})"),
        family(Family::L, Some(Rational::zero())),
        space,
        [
            mult(format!("i({r1} sin {eps}x + {r2} cos {eps}x)"), move |x| {
                let t = x * eps;
                Ok((t.sin() * r1 + t.cos() * r2) * c(0.0, 1.0))
            }),
            mult(format!("i({r1} cos {eps}x - {r2} sin {eps}x)"), move |x| {
                let t = x * eps;
                Ok((t.cos() * r1 - t.sin() * r2) * c(0.0, 1.0))
            }),
            d(1.0 / eps),
        ],
    )
}

/// g(λ): `X1 ↦ ia e^{εx}`, `X2 ↦ ib e^{λεx}`, `X3 ↦ (1/ε) d/dx`.
pub fn g_rep(a: f64, b: f64, lambda: &Rational, eps: f64) -> RepRealization {
    let lf = lambda.to_f64();
    rep(
        format!("g(lambda={lambda}; a={a}, b={b}, eps={eps})"),
        family(Family::G, Some(lambda.clone())),
        FunctionSpace::l2_real_line(),
        [
            mult(format!("i{a}·exp({eps}x)"), move |x| Ok((x * eps).exp() * c(0.0, a))),
            mult(format!("i{b}·exp({}x)", lf * eps), move |x| {
                Ok((x * (lf * eps)).exp() * c(0.0, b))
            }),
            d(1.0 / eps),
        ],
    )
}

/// l(λ): `X1 ↦ i e^{λεx}(a cos εx + b sin εx)`,
/// `X2 ↦ i e^{λεx}(−a sin εx + b cos εx)`, `X3 ↦ (1/ε) d/dx`.
pub fn l_rep(a: f64, b: f64, lambda: &Rational, eps: f64) -> RepRealization {
    let lf = lambda.to_f64();
    rep(
        format!("l(lambda={lambda}; a={a}, b={b}, eps={eps})"),
        family(Family::L, Some(lambda.clone())),
        FunctionSpace::l2_real_line(),
        [
            mult(format!("i·exp({}x)({a} cos {eps}x + {b} sin {eps}x)", lf * eps), move |x| {
                let t = x * eps;
                Ok((x * (lf * eps)).exp() * (t.cos() * a + t.sin() * b) * c(0.0, 1.0))
            }),
            mult(format!("i·exp({}x)(-{a} sin {eps}x + {b} cos {eps}x)", lf * eps), move |x| {
                let t = x * eps;
                Ok((x * (lf * eps)).exp() * (t.cos() * b - t.sin() * a) * c(0.0, 1.0))
            }),
            d(1.0 / eps),
        ],
    )
}

/// c: `X1 ↦ ia e^{εx}`, `X2 ↦ i e^{εx}(aεx + b)`, `X3 ↦ (1/ε) d/dx`.
pub fn c_rep(a: f64, b: f64, eps: f64) -> RepRealization {
    rep(
        format!("c(a={a}, b={b}, eps={eps})"),
        family(Family::C, None),
        FunctionSpace::l2_real_line(),
        [
            mult(format!("i{a}·exp({eps}x)"), move |x| Ok((x * eps).exp() * c(0.0, a))),
            mult(format!("i·exp({eps}x)({a}·{eps}x + {b})"), move |x| {
                let o = x.order();
                Ok((x * eps).exp() * (x * (a * eps) + Jet::real(b, o)) * c(0.0, 1.0))
            }),
            d(1.0 / eps),
        ],
    )
}

/// su(2) on `H_{(l,ε)}` in `(θ, φ)`:
/// `X1 ↦ sin φ (1/ε) ∂θ + cot(εθ) cos φ ∂φ`,
/// `X2 ↦ −cos φ (1/ε) ∂θ + cot(εθ) sin φ ∂φ`, `X3 ↦ −∂φ`.
pub fn su2_rep(l: i64, eps: f64) -> Result<RepRealization, RepError> {
    let space = FunctionSpace::deformed_sphere(l, eps)?;
    let inv = 1.0 / eps;
    Ok(rep(
        format!("su2(l={l}, eps={eps})"),
        family(Family::Su2, None),
        space,
        [
            DiffOp::zero()
                .term(format!("{inv}·sin φ"), [1, 0], move |[_, p]| Ok(p.sin() * inv))
                .term(format!("cot({eps}θ)·cos φ"), [0, 1], move |[t, p]| {
                    Ok((t * eps).cot()? * p.cos())
                }),
            DiffOp::zero()
                .term(format!("-{inv}·cos φ"), [1, 0], move |[_, p]| Ok(p.cos() * -inv))
                .term(format!("cot({eps}θ)·sin φ"), [0, 1], move |[t, p]| {
                    Ok((t * eps).cot()? * p.sin())
                }),
            DiffOp::zero().constant(c(-1.0, 0.0), [0, 1]),
        ],
    ))
}

/// Principal series of sl₂(ℝ) rescaled by ε, with `s = ir ± ½`:
/// `X1 ↦ −s cos εx + sin εx (1/ε) d/dx`, `X2 ↦ s sin εx + cos εx (1/ε) d/dx`,
/// `X3 ↦ −(1/ε) d/dx`.
pub fn principal_series(r: f64, plus: bool, eps: f64, space: FunctionSpace) -> RepRealization {
    let s = c(if plus { 0.5 } else { -0.5 }, r);
    let inv = 1.0 / eps;
    let sign = if plus { '+' } else { '-' };
    rep(
        format!("sl2 principal(r={r}{sign}, eps={eps})"),
        family(Family::Sl2, None),
        space,
        [
            DiffOp::zero()
                .term(format!("-({s}) cos {eps}x"), [0, 0], move |[x, _]| Ok((x * eps).cos() * -s))
                .term(format!("{inv}·sin {eps}x"), [1, 0], move |[x, _]| Ok((x * eps).sin() * inv)),
            DiffOp::zero()
                .term(format!("({s}) sin {eps}x"), [0, 0], move |[x, _]| Ok((x * eps).sin() * s))
                .term(format!("{inv}·cos {eps}x"), [1, 0], move |[x, _]| Ok((x * eps).cos() * inv)),
            d(-inv),
        ],
    )
}

/// Kirillov model of the discrete series on `L²((0,∞), dx/x)` with
/// `X = X1 − X3 ↦ σix`, `Y = X1 + X3 ↦ σ(−i(n²−1)/(4x) + ix d²/dx²)`,
/// `H = 2X2 ↦ 2x d/dx`, where `σ = ±1`. For `σ = −1` this is the complex
/// conjugate of the `σ = +1` model.
pub fn kirillov(n: i64, sigma: f64) -> RepRealization {
    let cn = ((n * n - 1) as f64) / 4.0;
    // ρ(X1) = (X + Y)/2, ρ(X3) = (Y − X)/2, ρ(X2) = x d/dx
    let half_y = move |op: DiffOp, sx: f64| {
        op.term(format!("{sigma}i({sx}x - {cn}/x)/2"), [0, 0], move |[x, _]| {
            Ok((x * sx - x.recip()? * cn) * c(0.0, 0.5 * sigma))
        })
        .term(format!("{}i x/2", sigma), [2, 0], move |[x, _]| Ok(x * c(0.0, 0.5 * sigma)))
    };
    rep(
        format!("sl2 Kirillov(n={n}, sign={sigma})"),
        family(Family::Sl2, None),
        FunctionSpace::half_line_dx_over_x(),
        [
            half_y(DiffOp::zero(), 1.0),
            DiffOp::zero().term("x", [1, 0], |[x, _]| Ok(x)),
            half_y(DiffOp::zero(), -1.0),
        ],
    )
}

/// The Schrödinger representation `η_A` of h on `L²(ℝ)`:
/// `X1 ↦ iA`, `X2 ↦ iAx`, `X3 ↦ d/dx`.
pub fn h_rep(amp: f64) -> RepRealization {
    rep(
        format!("h(A={amp})"),
        family(Family::H, None),
        FunctionSpace::l2_real_line(),
        [
            DiffOp::zero().constant(c(0.0, amp), [0, 0]),
            mult(format!("i{amp}x"), move |x| Ok(x * c(0.0, amp))),
            d(1.0),
        ],
    )
}

/// `η_R` of iso(2) on the plane in polar coordinates `(r, φ)`:
/// `X1 ↦ −cos φ ∂r + (sin φ / r) ∂φ`, `X2 ↦ −sin φ ∂r − (cos φ / r) ∂φ`,
/// `X3 ↦ −∂φ`. The parameter only selects the eigenspace `Ω_R`.
pub fn iso2_polar(r_param: f64) -> RepRealization {
    rep(
        format!("iso2 polar(R={r_param})"),
        family(Family::L, Some(Rational::zero())),
        FunctionSpace::polar_plane(),
        [
            DiffOp::zero()
                .term("-cos φ", [1, 0], |[_, p]| Ok(-p.cos()))
                .term("sin φ/r", [0, 1], |[r, p]| Ok(p.sin() * r.recip()?)),
            DiffOp::zero()
                .term("-sin φ", [1, 0], |[_, p]| Ok(-p.sin()))
                .term("-cos φ/r", [0, 1], |[r, p]| Ok(-(p.cos() * r.recip()?))),
            DiffOp::zero().constant(c(-1.0, 0.0), [0, 1]),
        ],
    )
}

/// iso(1,1) = g(−1) on `L²((0,∞), dx/x)`:
/// `X1 ↦ iax`, `X2 ↦ −ib/x`, `X3 ↦ x d/dx`.
pub fn iso11_rep(a: f64, b: f64) -> RepRealization {
    rep(
        format!("iso11(a={a}, b={b})"),
        family(Family::G, Some(Rational::from_int(-1))),
        FunctionSpace::half_line_dx_over_x(),
        [
            mult(format!("i{a}x"), move |x| Ok(x * c(0.0, a))),
            mult(format!("-i{b}/x"), move |x| Ok(x.recip()? * c(0.0, -b))),
            DiffOp::zero().term("x", [1, 0], |[x, _]| Ok(x)),
        ],
    )
}
