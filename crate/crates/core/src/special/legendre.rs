//! Associated Legendre functions without the Condon–Shortley phase.

use super::SpecialError;

fn check(l: i64, m: i64, x: f64) -> Result<(), SpecialError> {
    if l < 0 || m.abs() > l {
        return Err(SpecialError::Domain(format!("need |m| ≤ l, got l={l}, m={m}")));
    }
    if !(-1.0..=1.0).contains(&x) {
        return Err(SpecialError::Domain(format!("x={x} outside [-1, 1]")));
    }
    Ok(())
}

/// `P̄_l^m(x) = (1−x²)^{m/2} d^m/dx^m P_l(x)` for `m ≥ 0`;
/// `P̄_l^{−m} = (−1)^m (l−m)!/(l+m)! P̄_l^m`.
///
/// Upward recurrence in `l` from `P̄_m^m = (2m−1)!! (1−x²)^{m/2}`.
pub fn assoc_legendre(l: i64, m: i64, x: f64) -> Result<f64, SpecialError> {
    check(l, m, x)?;
    if m < 0 {
        let k = -m;
        let p = assoc_legendre(l, k, x)?;
        // (l−k)!/(l+k)! as a running product
        let mut ratio = 1.0;
        for j in (l - k + 1)..=(l + k) {
            ratio /= j as f64;
        }
        let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
        return Ok(sign * ratio * p);
    }
    let s = (1.0 - x * x).max(0.0).sqrt();
    let mut pmm = 1.0;
    for k in 1..=m {
        pmm *= (2 * k - 1) as f64 * s;
    }
    if l == m {
        return Ok(pmm);
    }
    let mut prev = pmm;
    let mut cur = x * (2 * m + 1) as f64 * pmm;
    for ll in (m + 2)..=l {
        let next = (x * (2 * ll - 1) as f64 * cur - (ll + m - 1) as f64 * prev) / (ll - m) as f64;
        prev = cur;
        cur = next;
    }
    Ok(cur)
}

/// `Q_l^m(x) = sqrt((l−m)!/(l+m)!) P̄_l^m(x)` for `0 ≤ m ≤ l`, evaluated by a
/// recurrence that stays O(1) for large `l`. Returns `(Q_l^m, Q_{l−1}^m)`,
/// the second entry being 0 when `l = m`.
pub fn normalized_legendre_pair(l: i64, m: i64, x: f64) -> Result<(f64, f64), SpecialError> {
    check(l, m, x)?;
    if m < 0 {
        return Err(SpecialError::Domain(format!("normalized recurrence needs m ≥ 0, got {m}")));
    }
    let s = (1.0 - x * x).max(0.0).sqrt();
    let mut qmm = 1.0;
    for k in 1..=m {
        qmm *= ((2 * k - 1) as f64 / (2 * k) as f64).sqrt() * s;
    }
    if l == m {
        return Ok((qmm, 0.0));
    }
    let mut prev = qmm;
    let mut cur = x * ((2 * m + 1) as f64).sqrt() * qmm;
    for ll in (m + 2)..=l {
        let lm = (ll - m) as f64;
        let lp = (ll + m) as f64;
        let a = x * (2 * ll - 1) as f64 / (lm * lp).sqrt();
        let b = (((ll + m - 1) * (ll - m - 1)) as f64 / (lm * lp)).sqrt();
        let next = a * cur - b * prev;
        prev = cur;
        cur = next;
    }
    Ok((cur, prev))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn low_orders() {
        assert_eq!(assoc_legendre(0, 0, 0.3).unwrap(), 1.0);
        assert_eq!(assoc_legendre(1, 0, 0.5).unwrap(), 0.5);
        let x: f64 = 0.4;
        let s = (1.0 - x * x).sqrt();
        assert!((assoc_legendre(1, 1, x).unwrap() - s).abs() < 1e-15);
        assert!((assoc_legendre(2, 1, x).unwrap() - 3.0 * x * s).abs() < 1e-15);
        assert!((assoc_legendre(2, 2, x).unwrap() - 3.0 * s * s).abs() < 1e-15);
        assert!((assoc_legendre(2, -1, x).unwrap() + 3.0 * x * s / 6.0).abs() < 1e-15);
    }

    #[test]
    fn domain_errors() {
        assert!(assoc_legendre(2, 3, 0.1).is_err());
        assert!(assoc_legendre(2, 1, 1.5).is_err());
        assert!(assoc_legendre(-1, 0, 0.0).is_err());
    }

    #[test]
    fn normalized_matches_unnormalized() {
        for l in 0..20 {
            for m in 0..=l {
                let x = 0.37;
                let p = assoc_legendre(l, m, x).unwrap();
                let mut ratio = 1.0;
                for j in (l - m + 1)..=(l + m) {
                    ratio /= j as f64;
                }
                let q = normalized_legendre_pair(l, m, x).unwrap().0;
                assert!((q - ratio.sqrt() * p).abs() < 1e-12 * (1.0 + q.abs()), "l={l} m={m}");
            }
        }
    }
}
