//! Spherical harmonics in the convention whose small-angle limit is
//! `Y_l^m(Rθ/l, φ) → i^m J_m(Rθ) e^{−imφ}`.

use num_complex::Complex64;
use serde::Serialize;

use super::legendre::normalized_legendre_pair;
use super::SpecialError;

/// Normalization and phase of `Y_l^m`.
///
/// `Y_l^m(θ,φ) = N(l,m) P̄_l^m(cos θ) e^{σ i m φ}` with `P̄` the Legendre
/// function selected by `condon_shortley`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SphHarmConvention {
    pub condon_shortley: bool,
    /// `σ` in `e^{σ i m φ}`.
    pub azimuthal_sign: i8,
}

/// The convention used throughout: no Condon–Shortley phase, `e^{−imφ}`, and
/// `N(l,m) = i^{|m|} sqrt((l−|m|)!/(l+|m|)!)` for `m ≥ 0` (the reflection
/// formula for `P̄^{−m}` fixes `N(l,−m)`).
///
/// With the disc weight `(2l+1) ε sin(εθ) / 4π` this basis is orthonormal, the
/// generators act by the two-term ladder, and the small-angle limit has unit
/// constant.
pub const CONVENTION: SphHarmConvention = SphHarmConvention {
    condon_shortley: false,
    azimuthal_sign: -1,
};

impl SphHarmConvention {
    /// `|N(l,m)|` for `m ≥ 0`; underflows to 0 for very large `m`.
    pub fn normalization_magnitude(&self, l: i64, m: i64) -> f64 {
        let k = m.abs();
        let mut r = 1.0f64;
        for j in (l - k + 1)..=(l + k) {
            r /= (j as f64).sqrt();
        }
        r
    }
}

/// `i^k` for integer `k`.
pub fn i_power(k: i64) -> Complex64 {
    match k.rem_euclid(4) {
        0 => Complex64::new(1.0, 0.0),
        1 => Complex64::new(0.0, 1.0),
        2 => Complex64::new(-1.0, 0.0),
        _ => Complex64::new(0.0, -1.0),
    }
}

/// `Y_l^m(θ, φ)` in [`CONVENTION`].
pub fn sph_harm(l: i64, m: i64, theta: f64, phi: f64) -> Result<Complex64, SpecialError> {
    if l < 0 || m.abs() > l {
        return Err(SpecialError::Domain(format!("need |m| ≤ l, got l={l}, m={m}")));
    }
    let (q, _) = normalized_legendre_pair(l, m.abs(), theta.cos())?;
    Ok(i_power(m.abs()) * q * Complex64::from_polar(1.0, -(m as f64) * phi))
}

/// Taylor coefficients `a_k` of `u ↦ Q_l^{|m|}(cos u)` around `u0`, `k ≤ order`,
/// where `Q = sqrt((l−|m|)!/(l+|m|)!) P̄^{|m|}`.
///
/// The first derivative comes from the contiguous relation, the rest from the
/// associated Legendre equation `sin²u f'' + sin u cos u f' + (L sin²u − m²) f = 0`.
pub fn legendre_theta_taylor(
    l: i64,
    m: i64,
    u0: f64,
    order: usize,
) -> Result<Vec<f64>, SpecialError> {
    let k = m.abs();
    if l < 0 || k > l {
        return Err(SpecialError::Domain(format!("need |m| ≤ l, got l={l}, m={m}")));
    }
    let (s, c) = u0.sin_cos();
    if s.abs() < 1e-12 {
        return Err(SpecialError::Singular(format!("θ = {u0} is a pole")));
    }
    let (q, qm1) = normalized_legendre_pair(l, k, c)?;
    let d1 = (l as f64 * c * q - (((l + k) * (l - k)) as f64).sqrt() * qm1) / s;
    let mut a = vec![0.0; order + 1];
    a[0] = q;
    if order == 0 {
        return Ok(a);
    }
    a[1] = d1;
    let big_l = (l * (l + 1)) as f64;
    let m2 = (k * k) as f64;
    // series of sin² and sin·cos around u0 via cos(2u), sin(2u)
    let n = order + 1;
    let mut p = vec![0.0; n];
    let mut qq = vec![0.0; n];
    let mut fact = 1.0;
    let mut pow2 = 1.0;
    for j in 0..n {
        if j > 0 {
            fact *= j as f64;
            pow2 *= 2.0;
        }
        let shift = 2.0 * u0 + j as f64 * std::f64::consts::FRAC_PI_2;
        let coef = pow2 / fact;
        p[j] = if j == 0 { s * s } else { -0.5 * coef * shift.cos() };
        qq[j] = 0.5 * coef * shift.sin();
    }
    let r = |j: usize| big_l * p[j] - if j == 0 { m2 } else { 0.0 };
    for nn in 0..order.saturating_sub(1) {
        let mut rest = 0.0;
        for j in 0..=nn {
            let i2 = nn - j + 2;
            if j > 0 {
                rest += p[j] * (i2 * (i2 - 1)) as f64 * a[i2];
            }
            rest += qq[j] * (nn - j + 1) as f64 * a[nn - j + 1];
            rest += r(j) * a[nn - j];
        }
        a[nn + 2] = -rest / (p[0] * ((nn + 2) * (nn + 1)) as f64);
    }
    Ok(a)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::special::legendre::assoc_legendre;

    #[test]
    fn constant_for_l_zero() {
        let a = sph_harm(0, 0, 0.3, 1.0).unwrap();
        let b = sph_harm(0, 0, 2.1, -0.4).unwrap();
        assert!((a - b).norm() < 1e-15);
        assert!((a - Complex64::new(1.0, 0.0)).norm() < 1e-15);
    }

    #[test]
    fn matches_legendre_for_small_l() {
        let (th, ph) = (0.7, 0.3);
        let y = sph_harm(2, 1, th, ph).unwrap();
        let want = Complex64::new(0.0, 1.0) * (1.0f64 / 6.0).sqrt()
            * assoc_legendre(2, 1, th.cos()).unwrap()
            * Complex64::from_polar(1.0, -ph);
        assert!((y - want).norm() < 1e-14);
    }

    #[test]
    fn taylor_matches_finite_differences() {
        let (l, m, u0) = (5, 2, 0.8);
        let a = legendre_theta_taylor(l, m, u0, 4).unwrap();
        let f = |u: f64| normalized_legendre_pair(l, m, u.cos()).unwrap().0;
        let h = 1e-4;
        let d1 = (f(u0 + h) - f(u0 - h)) / (2.0 * h);
        let d2 = (f(u0 + h) - 2.0 * f(u0) + f(u0 - h)) / (h * h);
        assert!((a[1] - d1).abs() < 1e-7);
        assert!((2.0 * a[2] - d2).abs() < 1e-5);
        // third derivative against differences of the exact first derivative
        let b = |u: f64| legendre_theta_taylor(l, m, u, 1).unwrap()[1];
        let d3 = (b(u0 + h) - 2.0 * b(u0) + b(u0 - h)) / (h * h);
        assert!((6.0 * a[3] - d3).abs() < 1e-4);
    }

    #[test]
    fn pole_is_rejected() {
        assert!(legendre_theta_taylor(3, 1, 0.0, 2).is_err());
    }
}
