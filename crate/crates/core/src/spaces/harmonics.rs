//! Rescaled spherical harmonics on the deformed disc and Bessel modes on the plane.

use std::f64::consts::PI;
use std::sync::Arc;

use num_complex::Complex64;

use crate::jet::{factorial, EvalError, Jet};
use crate::special::sph_harm::legendre_theta_taylor;
use crate::special::{bessel_j_derivative, i_power, sph_harm};

use super::functions::{Func, Support, TestFunction};

/// `χ_{l,ε}^m(θ, φ) = Y_l^m(εθ, φ)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DeformedHarmonic {
    pub l: i64,
    pub m: i64,
    pub eps: f64,
}

impl DeformedHarmonic {
    pub fn new(l: i64, m: i64, eps: f64) -> Self {
        assert!(m.abs() <= l, "need |m| ≤ l");
        assert!(eps > 0.0, "need ε > 0");
        DeformedHarmonic { l, m, eps }
    }

    pub fn into_func(self) -> Func {
        Arc::new(self)
    }
}

fn azimuthal(sign_m: f64, phi0: f64, order: usize) -> Vec<Complex64> {
    // Taylor coefficients of e^{i·sign_m·φ} at φ0
    let base = Complex64::from_polar(1.0, sign_m * phi0);
    let k = Complex64::new(0.0, sign_m);
    (0..=order).map(|j| base * k.powu(j as u32) / factorial(j)).collect()
}

impl TestFunction for DeformedHarmonic {
    fn dim(&self) -> usize {
        2
    }

    fn support(&self) -> Support {
        Support::rect([0.0, f64::NEG_INFINITY], [PI / self.eps, f64::INFINITY])
    }

    fn jet(&self, p: [f64; 2], order: usize) -> Result<Jet, EvalError> {
        if order == 0 {
            return Ok(Jet::constant(sph_harm(self.l, self.m, self.eps * p[0], p[1])?, 0));
        }
        let a = legendre_theta_taylor(self.l, self.m, self.eps * p[0], order)?;
        let pre = i_power(self.m.abs());
        let theta: Vec<Complex64> = a
            .iter()
            .enumerate()
            .map(|(k, v)| pre * v * self.eps.powi(k as i32))
            .collect();
        let phi = azimuthal(-(self.m as f64), p[1], order);
        Ok(Jet::from_product(&theta, &phi, order))
    }

    fn describe(&self) -> String {
        format!("chi(l={}, m={}, eps={})", self.l, self.m, self.eps)
    }

    fn as_harmonic(&self) -> Option<&DeformedHarmonic> {
        Some(self)
    }
}

/// `B_m^R(r, φ) = i^m J_m(R r) e^{imφ}`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BesselMode {
    pub r_param: f64,
    pub m: i64,
}

impl BesselMode {
    pub fn new(r_param: f64, m: i64) -> Self {
        assert!(r_param != 0.0, "need R ≠ 0");
        BesselMode { r_param, m }
    }

    pub fn into_func(self) -> Func {
        Arc::new(self)
    }
}

impl TestFunction for BesselMode {
    fn dim(&self) -> usize {
        2
    }

    fn support(&self) -> Support {
        Support::Unbounded
    }

    fn jet(&self, p: [f64; 2], order: usize) -> Result<Jet, EvalError> {
        let pre = i_power(self.m);
        let rr = self.r_param;
        let radial: Vec<Complex64> = (0..=order)
            .map(|k| {
                pre * bessel_j_derivative(self.m, k as u32, rr * p[0]) * rr.powi(k as i32)
                    / factorial(k)
            })
            .collect();
        let phi = azimuthal(self.m as f64, p[1], order);
        Ok(Jet::from_product(&radial, &phi, order))
    }

    fn describe(&self) -> String {
        format!("B(R={}, m={})", self.r_param, self.m)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn harmonic_phi_derivative_is_minus_im() {
        let chi = DeformedHarmonic::new(4, 2, 0.5);
        let p = [1.1, 0.7];
        let j = chi.jet(p, 2).unwrap();
        let v = j.value();
        assert!((j.derivative(0, 1) - Complex64::new(0.0, -2.0) * v).norm() < 1e-14);
        assert!((j.value() - chi.value(p).unwrap()).norm() < 1e-15);
    }

    #[test]
    fn bessel_mode_radial_derivative() {
        let b = BesselMode::new(2.0, 1);
        let p = [0.8, 0.3];
        let j = b.jet(p, 1).unwrap();
        let h = 1e-6;
        let fd = (b.value([p[0] + h, p[1]]).unwrap() - b.value([p[0] - h, p[1]]).unwrap()) / (2.0 * h);
        assert!((j.derivative(1, 0) - fd).norm() < 1e-8);
    }
}
