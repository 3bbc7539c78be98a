//! Special functions against exact rational arithmetic.

mod common;

use common::oracle::{bessel_oracle, legendre_oracle};
use iwcon::special::{assoc_legendre, bessel_j, sph_harm};
use proptest::prelude::*;
use proptest::test_runner::RngSeed;

#[test]
fn bessel_j1_at_one() {
    let oracle = bessel_oracle(1, 1, 1);
    assert!((oracle - 0.4400505857).abs() < 1e-9);
    assert!((bessel_j(1, 1.0) - oracle).abs() < 1e-9);
    assert!((bessel_j(1, 1.0) - oracle).abs() < 1e-15);
}

#[test]
fn bessel_across_the_crossover() {
    for m in -6..=6 {
        for i in 0..=60 {
            let x = 0.25 * i as f64;
            let want = bessel_oracle(m, i, 4);
            let got = bessel_j(m, x);
            assert!((got - want).abs() < 1e-12, "J_{m}({x}): {got} vs {want}");
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig {
        cases: 100,
        rng_seed: RngSeed::Fixed(0x1e9e),
        ..ProptestConfig::default()
    })]

    #[test]
    fn legendre_matches_exact_oracle(l in 0i64..=30, mf in -1.0f64..1.0, xi in -999i64..=999) {
        let m = (mf * (l as f64 + 0.999)).trunc() as i64;
        let x = xi as f64 / 1000.0;
        let want = legendre_oracle(l, m, x);
        let got = assoc_legendre(l, m, x).unwrap();
        let scale = want.abs().max(f64::MIN_POSITIVE);
        prop_assert!((got - want).abs() <= 1e-10 * scale, "P({l},{m},{x}) = {got}, oracle {want}");
    }

}

proptest! {
    #![proptest_config(ProptestConfig {
        cases: 64,
        rng_seed: RngSeed::Fixed(0xb35e1),
        ..ProptestConfig::default()
    })]

    #[test]
    fn bessel_matches_series_oracle(m in -8i64..=8, p in 0i64..=1280) {
        let x = p as f64 / 64.0;
        prop_assert!((bessel_j(m, x) - bessel_oracle(m, p, 64)).abs() < 1e-12);
    }
}

#[test]
fn harmonics_are_normalized_on_the_sphere() {
    // ∫ |Y_l^m|² (2l+1)/(4π) sinθ dθ dφ = 1 with the sphere measure used for χ
    for l in 0..=6 {
        for m in -l..=l {
            let n = 400;
            let mut s = 0.0;
            for i in 0..n {
                let t = (i as f64 + 0.5) * std::f64::consts::PI / n as f64;
                let y = sph_harm(l, m, t, 0.3).unwrap().norm_sqr();
                s += y * t.sin() * std::f64::consts::PI / n as f64;
            }
            let total = s * 2.0 * std::f64::consts::PI * (2 * l + 1) as f64 / (4.0 * std::f64::consts::PI);
            assert!((total - 1.0).abs() < 1e-4, "l={l} m={m}: {total}");
        }
    }
}
