//! Exact rational oracles for the special functions, shared by the test
//! suites.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

fn exact(x: f64) -> BigRational {
    BigRational::from_float(x).expect("finite")
}

fn factorial(n: i64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * k)
}

/// `J_m(p/q) = Σ_k (−1)^k (x/2)^{2k+m} / (k! (k+m)!)`, summed until the
/// terms fall below 10⁻⁵⁰.
pub fn bessel_oracle(m: i64, p: i64, q: i64) -> f64 {
    let (m, sign) = if m < 0 && m % 2 != 0 { (-m, -1.0) } else { (m.abs(), 1.0) };
    let h = BigRational::new(p.into(), (2 * q).into());
    let tol = BigRational::new(1.into(), BigInt::from(10).pow(50));
    let h2 = &h * &h;
    let mut term = (0..m).fold(BigRational::one(), |acc, _| acc * &h)
        / BigRational::from_integer(factorial(m));
    let mut sum = BigRational::zero();
    let mut k = 0i64;
    loop {
        sum += &term;
        k += 1;
        term = -term * &h2 / BigRational::from_integer(BigInt::from(k * (k + m)));
        if term.abs() < tol && k > 2 {
            break;
        }
    }
    sign * sum.to_f64().unwrap()
}

/// Coefficients of `P_l` from `2^{−l} Σ_k (−1)^k C(l,k) C(2l−2k,l) x^{l−2k}`,
/// indexed by power.
fn legendre_poly(l: i64) -> Vec<BigRational> {
    let binom = |n: i64, k: i64| factorial(n) / (factorial(k) * factorial(n - k));
    let mut c = vec![BigRational::zero(); l as usize + 1];
    let two_l = BigInt::from(2).pow(l as u32);
    for k in 0..=l / 2 {
        let v = binom(l, k) * binom(2 * l - 2 * k, l);
        let v = if k % 2 == 0 { v } else { -v };
        c[(l - 2 * k) as usize] = BigRational::new(v, two_l.clone());
    }
    c
}

/// `P̄_l^m(x) = (1−x²)^{m/2} d^m/dx^m P_l(x)` with `P̄_l^{−m} = (−1)^m (l−m)!/(l+m)! P̄_l^m`.
/// Everything except the final square root is exact.
pub fn legendre_oracle(l: i64, m: i64, x: f64) -> f64 {
    let k = m.abs();
    let mut c = legendre_poly(l);
    for _ in 0..k {
        c = c
            .iter()
            .enumerate()
            .skip(1)
            .map(|(p, a)| a * BigRational::from_integer(BigInt::from(p)))
            .collect();
    }
    let xr = exact(x);
    let mut d = BigRational::zero();
    for a in c.iter().rev() {
        d = d * &xr + a;
    }
    let one_minus = BigRational::one() - &xr * &xr;
    let mut v = d * (0..k / 2).fold(BigRational::one(), |acc, _| acc * &one_minus);
    if m < 0 {
        v *= BigRational::new(factorial(l - k), factorial(l + k));
        if k % 2 == 1 {
            v = -v;
        }
    }
    let root = if k % 2 == 1 { one_minus.to_f64().unwrap().sqrt() } else { 1.0 };
    v.to_f64().unwrap() * root
}
