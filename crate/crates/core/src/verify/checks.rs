//! Inner-product preservation and the spherical-to-Bessel asymptotic.

use num_complex::Complex64;

use crate::algebra::CaseId;
use crate::reps::ContractionCase;
use crate::special::{bessel_j, i_power, sph_harm};
use crate::spaces::{gram_matrix, DEFAULT_PANELS};

use super::schedule::ProbeSet;
use super::VerifyError;

/// `max |⟨L f, L g⟩ − ⟨f, g⟩_{ε₀}|` over probe pairs. For the harmonic case
/// the images `B_{−m}` are orthonormal in the limit space by construction,
/// so the check reduces to orthonormality of the probes at `ε₀`.
pub fn condition_iii_check(case: &ContractionCase, probes: &ProbeSet) -> Result<f64, VerifyError> {
    let g0 = gram_matrix(&probes.functions, &case.space(probes.eps0)?, DEFAULT_PANELS)?;
    let n = probes.functions.len();
    let target: Vec<Vec<Complex64>> = if case.id == CaseId::Su2ToIso2 {
        let ms: Vec<i64> = probes
            .functions
            .iter()
            .map(|f| f.as_harmonic().map(|h| h.m).ok_or(VerifyError::Domain("harmonic probes expected".into())))
            .collect::<Result<_, _>>()?;
        (0..n)
            .map(|i| (0..n).map(|j| Complex64::new(if ms[i] == ms[j] { 1.0 } else { 0.0 }, 0.0)).collect())
            .collect()
    } else {
        let images = probes
            .functions
            .iter()
            .map(|f| case.limit_map(f, probes.eps0))
            .collect::<Result<Vec<_>, _>>()?;
        gram_matrix(&images, &case.target_space(), DEFAULT_PANELS)?
    };
    let mut worst: f64 = 0.0;
    for i in 0..n {
        for j in 0..n {
            worst = worst.max((g0[i][j] - target[i][j]).norm());
        }
    }
    Ok(worst)
}

/// `sup_θ |Y_l^m(Rθ/l, 0) − i^m J_m(Rθ)|` for each `l`.
pub fn sph_to_bessel_check(
    r: f64,
    m: i64,
    l_schedule: &[i64],
    theta_grid: &[f64],
) -> Result<Vec<(i64, f64)>, VerifyError> {
    if r <= 0.0 || !r.is_finite() {
        return Err(VerifyError::Domain(format!("need R > 0, got {r}")));
    }
    let target: Vec<Complex64> = theta_grid
        .iter()
        .map(|&t| i_power(m) * bessel_j(m, r * t))
        .collect();
    l_schedule
        .iter()
        .map(|&l| {
            if m.abs() > l {
                return Err(VerifyError::Domain(format!("|m| = {} exceeds l = {l}", m.abs())));
            }
            let edge = l as f64 * std::f64::consts::PI / r;
            let mut worst: f64 = 0.0;
            for (&t, &b) in theta_grid.iter().zip(&target) {
                if !(0.0..edge).contains(&t) {
                    return Err(VerifyError::Domain(format!(
                        "θ = {t} is outside the deformed disc [0, {edge})"
                    )));
                }
                let y = sph_harm(l, m, r * t / l as f64, 0.0)?;
                worst = worst.max((y - b).norm());
            }
            Ok((l, worst))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spaces::midpoint_grid;

    #[test]
    fn origin_error_is_normalization_only() {
        let e = sph_to_bessel_check(1.0, 0, &[10, 100], &[0.0]).unwrap();
        // P_l(1) = 1 and J_0(0) = 1, up to one rounding per recurrence step
        assert!(e.iter().all(|&(l, v)| v < 1e-15 * l as f64), "{e:?}");
    }

    #[test]
    fn errors_halve_with_degree() {
        let grid = midpoint_grid(0.1, 5.0, 100);
        let e = sph_to_bessel_check(1.0, 1, &[25, 50, 100, 200], &grid).unwrap();
        assert!(e.windows(2).all(|w| w[1].1 < w[0].1));
        let ratio = e[3].1 / e[2].1;
        assert!((0.3..=0.7).contains(&ratio), "{ratio}");
    }

    #[test]
    fn grid_must_stay_in_the_disc() {
        assert!(sph_to_bessel_check(1.0, 0, &[2], &[7.0]).is_err());
        assert!(sph_to_bessel_check(1.0, 3, &[2], &[0.5]).is_err());
    }
}
