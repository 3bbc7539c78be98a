//! Composite 16-point Gauss–Legendre quadrature.

use std::sync::OnceLock;

use num_complex::Complex64;

use crate::jet::EvalError;

use super::functions::{Func, Support};
use super::{FunctionSpace, SpaceError};

/// Panels per axis used when the caller has no better choice.
pub const DEFAULT_PANELS: usize = 32;

/// Nodes and weights on `[−1, 1]`, computed once by Newton iteration on `P_16`.
pub fn gauss_legendre_16() -> &'static ([f64; 16], [f64; 16]) {
    static RULE: OnceLock<([f64; 16], [f64; 16])> = OnceLock::new();
    RULE.get_or_init(|| {
        let n = 16;
        let mut x = [0.0; 16];
        let mut w = [0.0; 16];
        for i in 0..n {
            let mut z = (std::f64::consts::PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
            let mut dp = 0.0;
            for _ in 0..100 {
                let (mut p0, mut p1) = (1.0, z);
                for k in 2..=n {
                    let p2 = ((2 * k - 1) as f64 * z * p1 - (k - 1) as f64 * p0) / k as f64;
                    p0 = p1;
                    p1 = p2;
                }
                dp = n as f64 * (z * p1 - p0) / (z * z - 1.0);
                let dz = p1 / dp;
                z -= dz;
                if dz.abs() < 1e-16 {
                    break;
                }
            }
            x[i] = -z;
            w[i] = 2.0 / ((1.0 - z * z) * dp * dp);
        }
        (x, w)
    })
}

fn nodes_1d(a: f64, b: f64, panels: usize) -> Vec<(f64, f64)> {
    let (x, w) = gauss_legendre_16();
    let h = (b - a) / panels as f64;
    let mut out = Vec::with_capacity(16 * panels);
    for p in 0..panels {
        let lo = a + p as f64 * h;
        for k in 0..16 {
            out.push((lo + 0.5 * h * (x[k] + 1.0), 0.5 * h * w[k]));
        }
    }
    out
}

/// `n` interior points `a + (k + ½)(b − a)/n`.
pub fn midpoint_grid(a: f64, b: f64, n: usize) -> Vec<f64> {
    let h = (b - a) / n as f64;
    (0..n).map(|k| a + (k as f64 + 0.5) * h).collect()
}

fn finite_range(lo: f64, hi: f64) -> Result<(f64, f64), SpaceError> {
    if lo.is_finite() && hi.is_finite() {
        Ok((lo, hi))
    } else {
        Err(SpaceError::UnboundedSupport)
    }
}

/// Integration box: the domain intersected with the support.
fn region(space: &FunctionSpace, support: &Support) -> Result<Option<[(f64, f64); 2]>, SpaceError> {
    let (dlo, dhi) = space.domain.bounds();
    let s = support.intersect(&Support::rect(dlo, dhi));
    let (lo, hi) = match s {
        Support::Unbounded => (dlo, dhi),
        Support::Bounded { lo, hi } => (lo, hi),
    };
    let x = finite_range(lo[0], hi[0])?;
    if x.0 >= x.1 {
        return Ok(None);
    }
    let y = if space.domain.dim() == 2 {
        let y = finite_range(lo[1], hi[1])?;
        if y.0 >= y.1 {
            return Ok(None);
        }
        y
    } else {
        (0.0, 0.0)
    };
    Ok(Some([x, y]))
}

/// `∫ integrand · weight` over the part of the domain inside `support`.
pub fn quadrature<F>(
    space: &FunctionSpace,
    integrand: F,
    support: &Support,
    panels: usize,
) -> Result<Complex64, SpaceError>
where
    F: Fn([f64; 2]) -> Result<Complex64, EvalError>,
{
    let Some([xr, yr]) = region(space, support)? else {
        return Ok(Complex64::new(0.0, 0.0));
    };
    let xs = nodes_1d(xr.0, xr.1, panels);
    let mut acc = Complex64::new(0.0, 0.0);
    if space.domain.dim() == 1 {
        for (x, w) in xs {
            let p = [x, 0.0];
            acc += integrand(p)? * (w * space.measure.weight(p));
        }
    } else {
        let ys = nodes_1d(yr.0, yr.1, panels);
        for &(x, wx) in &xs {
            for &(y, wy) in &ys {
                let p = [x, y];
                acc += integrand(p)? * (wx * wy * space.measure.weight(p));
            }
        }
    }
    Ok(acc)
}

/// `⟨f, g⟩ = ∫ f ḡ w`, linear in `f`.
pub fn inner_product(
    f: &Func,
    g: &Func,
    space: &FunctionSpace,
    panels: usize,
) -> Result<Complex64, SpaceError> {
    let support = f.support().intersect(&g.support());
    quadrature(
        space,
        |p| Ok(f.value(p)? * g.value(p)?.conj()),
        &support,
        panels,
    )
}

/// `G[i][j] = ⟨f_i, f_j⟩`, evaluating every function once per node.
pub fn gram_matrix(
    fs: &[Func],
    space: &FunctionSpace,
    panels: usize,
) -> Result<Vec<Vec<Complex64>>, SpaceError> {
    let n = fs.len();
    let mut g = vec![vec![Complex64::new(0.0, 0.0); n]; n];
    let Some(first) = fs.first() else {
        return Ok(g);
    };
    let support = fs.iter().skip(1).fold(first.support(), |s, f| s.hull(&f.support()));
    let Some([xr, yr]) = region(space, &support)? else {
        return Ok(g);
    };
    let xs = nodes_1d(xr.0, xr.1, panels);
    let ys = if space.domain.dim() == 2 {
        nodes_1d(yr.0, yr.1, panels)
    } else {
        vec![(0.0, 1.0)]
    };
    let mut vals = vec![Complex64::new(0.0, 0.0); n];
    for &(x, wx) in &xs {
        for &(y, wy) in &ys {
            let p = [x, y];
            let w = wx * wy * space.measure.weight(p);
            for (v, f) in vals.iter_mut().zip(fs) {
                *v = f.value(p)?;
            }
            for i in 0..n {
                for j in 0..n {
                    g[i][j] += vals[i] * vals[j].conj() * w;
                }
            }
        }
    }
    Ok(g)
}

pub fn norm(f: &Func, space: &FunctionSpace, panels: usize) -> Result<f64, SpaceError> {
    Ok(inner_product(f, f, space, panels)?.re.max(0.0).sqrt())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spaces::{bump, Domain, Measure};

    #[test]
    fn rule_integrates_polynomials() {
        let (x, w) = gauss_legendre_16();
        let sum: f64 = w.iter().sum();
        assert!((sum - 2.0).abs() < 1e-14);
        // degree 30 is exact
        let i30: f64 = x.iter().zip(w).map(|(x, w)| w * x.powi(30)).sum();
        assert!((i30 - 2.0 / 31.0).abs() < 1e-14);
    }

    #[test]
    fn x_squared_on_interval() {
        let space = FunctionSpace::new(Domain::interval(-1.0, 1.0).unwrap(), Measure::Lebesgue);
        let v = quadrature(&space, |p| Ok(Complex64::new(p[0] * p[0], 0.0)), &Support::Unbounded, 1).unwrap();
        assert!((v.re - 2.0 / 3.0).abs() < 1e-15);
    }

    #[test]
    fn gram_agrees_with_pairwise_products() {
        let space = FunctionSpace::l2_real_line();
        let fs = vec![bump(0.0, 1.0), bump(0.5, 1.0)];
        let g = gram_matrix(&fs, &space, DEFAULT_PANELS).unwrap();
        let ip = inner_product(&fs[0], &fs[1], &space, DEFAULT_PANELS).unwrap();
        assert!((g[0][1] - ip).norm() < 1e-14);
    }

    #[test]
    fn real_line_needs_support() {
        let space = FunctionSpace::l2_real_line();
        let r = quadrature(&space, |_| Ok(Complex64::new(1.0, 0.0)), &Support::Unbounded, 4);
        assert_eq!(r, Err(SpaceError::UnboundedSupport));
        let b = bump(0.0, 1.0);
        assert!(norm(&b, &space, DEFAULT_PANELS).unwrap() > 0.0);
    }
}
