//! Bessel functions of the first kind, integer order.

/// Below this argument the ascending series is summed directly; above it the
/// series loses too many digits to cancellation and Miller's downward
/// recurrence is used instead.
pub const SERIES_CROSSOVER: f64 = 8.0;

/// `J_m(x)` for integer `m` and real `x`.
pub fn bessel_j(m: i64, x: f64) -> f64 {
    if m < 0 {
        let v = bessel_j(-m, x);
        return if m % 2 == 0 { v } else { -v };
    }
    if x < 0.0 {
        let v = bessel_j(m, -x);
        return if m % 2 == 0 { v } else { -v };
    }
    if x == 0.0 {
        return if m == 0 { 1.0 } else { 0.0 };
    }
    if x < SERIES_CROSSOVER {
        series(m, x)
    } else {
        miller(m, x)
    }
}

fn series(m: i64, x: f64) -> f64 {
    let h = 0.5 * x;
    // (x/2)^m / m!
    let mut term = 1.0;
    for k in 1..=m {
        term *= h / k as f64;
    }
    let q = -h * h;
    let mut sum = term;
    let mut k = 1;
    loop {
        term *= q / (k as f64 * (k + m) as f64);
        sum += term;
        if term.abs() < 1e-18 * sum.abs() || k > 500 {
            break;
        }
        k += 1;
    }
    sum
}

fn miller(m: i64, x: f64) -> f64 {
    let top = (m as f64).max(x);
    let mut n = (top + 30.0 + 3.0 * top.sqrt()) as i64;
    n += n % 2;
    let mut next = 0.0;
    let mut cur = 1e-300;
    let mut result = 0.0;
    let mut norm = 0.0;
    for k in (1..=n).rev() {
        // J_{k−1} = (2k/x) J_k − J_{k+1}
        let prev = 2.0 * k as f64 / x * cur - next;
        next = cur;
        cur = prev;
        let idx = k - 1;
        if idx == m {
            result = cur;
        }
        if idx > 0 && idx % 2 == 0 {
            norm += 2.0 * cur;
        }
        if cur.abs() > 1e250 {
            cur *= 1e-250;
            next *= 1e-250;
            result *= 1e-250;
            norm *= 1e-250;
        }
    }
    norm += cur;
    result / norm
}

/// `d^k/dx^k J_m(x) = 2^{−k} Σ_j (−1)^j C(k,j) J_{m−k+2j}(x)`.
pub fn bessel_j_derivative(m: i64, k: u32, x: f64) -> f64 {
    let mut sum = 0.0;
    let mut binom = 1.0;
    for j in 0..=k as i64 {
        let sign = if j % 2 == 0 { 1.0 } else { -1.0 };
        sum += sign * binom * bessel_j(m - k as i64 + 2 * j, x);
        binom = binom * (k as i64 - j) as f64 / (j + 1) as f64;
    }
    sum / 2f64.powi(k as i32)
}
