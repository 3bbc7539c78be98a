//! Tridiagonal actions of the generators on orthonormal bases: spherical
//! harmonics for su(2), Bessel modes for iso(2).

use std::collections::BTreeMap;

use num_complex::Complex64;

use super::RepError;

pub type Ladder = BTreeMap<i64, Complex64>;

fn check_generator(k: usize) -> Result<(), RepError> {
    if k < 3 {
        Ok(())
    } else {
        Err(RepError::Domain(format!("generator index {k} out of range")))
    }
}

/// `ρ_l(X_k) χ^m = Σ c_{m'} χ^{m'}`, returned as `m' ↦ c_{m'}`.
pub fn su2_ladder(l: i64, m: i64, generator: usize) -> Result<Ladder, RepError> {
    check_generator(generator)?;
    if l < 0 || m.abs() > l {
        return Err(RepError::Domain(format!("need |m| ≤ l, got l = {l}, m = {m}")));
    }
    let down = (((l + m) * (l - m + 1)) as f64).sqrt();
    let up = (((l - m) * (l + m + 1)) as f64).sqrt();
    let mut out = Ladder::new();
    match generator {
        0 => {
            if down != 0.0 {
                out.insert(m - 1, Complex64::new(0.5 * down, 0.0));
            }
            if up != 0.0 {
                out.insert(m + 1, Complex64::new(-0.5 * up, 0.0));
            }
        }
        1 => {
            if down != 0.0 {
                out.insert(m - 1, Complex64::new(0.0, -0.5 * down));
            }
            if up != 0.0 {
                out.insert(m + 1, Complex64::new(0.0, -0.5 * up));
            }
        }
        _ => {
            out.insert(m, Complex64::new(0.0, m as f64));
        }
    }
    Ok(out)
}

/// `η_R(X_k) B_m = Σ c_{m'} B_{m'}`.
pub fn iso2_ladder(r_param: f64, m: i64, generator: usize) -> Result<Ladder, RepError> {
    check_generator(generator)?;
    if r_param == 0.0 || !r_param.is_finite() {
        return Err(RepError::Domain(format!("need finite R ≠ 0, got {r_param}")));
    }
    let h = 0.5 * r_param;
    let mut out = Ladder::new();
    match generator {
        0 => {
            out.insert(m - 1, Complex64::new(0.0, -h));
            out.insert(m + 1, Complex64::new(0.0, -h));
        }
        1 => {
            out.insert(m - 1, Complex64::new(h, 0.0));
            out.insert(m + 1, Complex64::new(-h, 0.0));
        }
        _ => {
            out.insert(m, Complex64::new(0.0, -(m as f64)));
        }
    }
    Ok(out)
}

/// `Σ w_k ladder_k`, merged by index.
pub fn combine(parts: &[(f64, Ladder)]) -> Ladder {
    let mut out = Ladder::new();
    for (w, l) in parts {
        if *w == 0.0 {
            continue;
        }
        for (k, v) in l {
            *out.entry(*k).or_insert(Complex64::new(0.0, 0.0)) += v * *w;
        }
    }
    out
}
