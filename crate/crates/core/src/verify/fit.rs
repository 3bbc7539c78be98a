//! Log-log least-squares rate fits.

use serde::{Serialize, Serializer};

use super::VerifyError;

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Rate {
    /// `e ≈ C ε^p` with coefficient of determination `r2`.
    Fit { p: f64, c: f64, r2: f64 },
    /// Every error is zero to within the exactness tolerance.
    Exact,
}

impl Rate {
    pub fn p(&self) -> f64 {
        match self {
            Rate::Fit { p, .. } => *p,
            Rate::Exact => f64::INFINITY,
        }
    }
}

impl Serialize for Rate {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Fit {
            p: f64,
            #[serde(rename = "C")]
            c: f64,
            r2: f64,
        }
        match *self {
            Rate::Fit { p, c, r2 } => Fit { p, c, r2 }.serialize(s),
            Rate::Exact => s.serialize_str("exact"),
        }
    }
}

/// Fits `log e = log C + p log ε`.
pub fn rate_fit(points: &[(f64, f64)]) -> Result<Rate, VerifyError> {
    if points.iter().all(|&(_, e)| e == 0.0) && !points.is_empty() {
        return Ok(Rate::Exact);
    }
    if points.len() < 3 {
        return Err(VerifyError::DegenerateFit("need at least 3 points".into()));
    }
    if points.iter().any(|&(x, e)| x.is_nan() || e.is_nan() || x <= 0.0 || e <= 0.0) {
        return Err(VerifyError::DegenerateFit("errors and ε must be positive".into()));
    }
    let n = points.len() as f64;
    let xs: Vec<f64> = points.iter().map(|p| p.0.ln()).collect();
    let ys: Vec<f64> = points.iter().map(|p| p.1.ln()).collect();
    let mx = xs.iter().sum::<f64>() / n;
    let my = ys.iter().sum::<f64>() / n;
    let sxx: f64 = xs.iter().map(|x| (x - mx).powi(2)).sum();
    let sxy: f64 = xs.iter().zip(&ys).map(|(x, y)| (x - mx) * (y - my)).sum();
    let syy: f64 = ys.iter().map(|y| (y - my).powi(2)).sum();
    if sxx == 0.0 {
        return Err(VerifyError::DegenerateFit("all ε are equal".into()));
    }
    let p = sxy / sxx;
    let c = (my - p * mx).exp();
    let r2 = if syy == 0.0 { 1.0 } else { (sxy * sxy) / (sxx * syy) };
    Ok(Rate::Fit { p, c, r2 })
}
