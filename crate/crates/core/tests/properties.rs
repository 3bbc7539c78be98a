use std::f64::consts::PI;

use iwcon::algebra::{classify, contraction_graph, Family, LinearMap3, Rational};
use iwcon::reps::{combine, su2_ladder, Ladder};
use iwcon::spaces::{bump, embed, inner_product, Embedding, FunctionSpace, DEFAULT_PANELS};
use iwcon::verify::{rate_fit, Rate};
use num_complex::Complex64;
use proptest::prelude::*;

fn invertible() -> impl Strategy<Value = LinearMap3> {
    prop::array::uniform3(prop::array::uniform3(-3i64..=3))
        .prop_map(LinearMap3::from_int_rows)
        .prop_filter("invertible", |b| b.is_invertible())
}

fn lambda() -> impl Strategy<Value = Rational> {
    (-6i64..=6, 1i64..=4)
        .prop_filter("nonzero", |(p, _)| *p != 0)
        .prop_map(|(p, q)| Rational::new(p, q))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn classification_ignores_the_basis(b in invertible(), lam in lambda(), k in 0usize..8) {
        let fam = Family::CATALOG[k];
        let alg = fam.instance(fam.has_parameter().then(|| lam.clone())).unwrap();
        let c0 = classify(&alg).unwrap();
        let c1 = classify(&alg.change_basis(&b).unwrap()).unwrap();
        prop_assert_eq!(c0.family, c1.family);
        prop_assert_eq!(c0.lambda, c1.lambda);
    }

    #[test]
    fn zero_extension_is_isometric(c1 in -1.5f64..1.5, r1 in 0.2f64..1.0, c2 in -1.5f64..1.5, r2 in 0.2f64..1.0, eps in 0.3f64..1.0) {
        let from = (-PI / eps, PI / eps);
        let to = (-PI / (0.5 * eps), PI / (0.5 * eps));
        let (f, g) = (bump(c1, r1), bump(c2, r2));
        let e = Embedding::ZeroExtension { from, to };
        let small = FunctionSpace::vanishing_interval(from.0, from.1).unwrap();
        let big = FunctionSpace::vanishing_interval(to.0, to.1).unwrap();
        let before = inner_product(&f, &g, &small, DEFAULT_PANELS).unwrap();
        let after = inner_product(&embed(&f, &e).unwrap(), &embed(&g, &e).unwrap(), &big, DEFAULT_PANELS).unwrap();
        prop_assert!((before - after).norm() < 1e-12);
    }

    #[test]
    fn su2_ladders_close_under_brackets(l in 1i64..60, mf in -1.0f64..1.0) {
        let m = (mf * l as f64).round() as i64;
        // [X1, X2] = X3, [X2, X3] = X1, [X3, X1] = X2 on χ^m
        let act = |k: usize, v: &Ladder| -> Ladder {
            let mut out = Ladder::new();
            for (&n, &c) in v {
                for (&n2, &d) in &su2_ladder(l, n, k).unwrap() {
                    *out.entry(n2).or_insert(Complex64::new(0.0, 0.0)) += c * d;
                }
            }
            out
        };
        let start: Ladder = [(m, Complex64::new(1.0, 0.0))].into();
        for (a, b, c) in [(0, 1, 2), (1, 2, 0), (2, 0, 1)] {
            let ab = act(a, &act(b, &start));
            let ba = act(b, &act(a, &start));
            let lhs = combine(&[(1.0, ab), (-1.0, ba)]);
            let rhs = act(c, &start);
            let diff = combine(&[(1.0, lhs), (-1.0, rhs)]);
            prop_assert!(diff.values().all(|z| z.norm() < 1e-9 * (l * l) as f64));
        }
    }

    #[test]
    fn rate_fit_recovers_power_laws(p in 0.5f64..3.0, c in 0.01f64..100.0) {
        let pts: Vec<(f64, f64)> = [0.1, 0.03, 0.01, 0.001].iter().map(|&e| (e, c * f64::powf(e, p))).collect();
        let Rate::Fit { p: q, c: d, r2 } = rate_fit(&pts).unwrap() else { panic!("not exact") };
        prop_assert!((q - p).abs() < 1e-9 && (d / c - 1.0).abs() < 1e-8 && r2 > 1.0 - 1e-12);
    }
}

#[test]
fn every_edge_contracts_to_its_target() {
    for e in contraction_graph() {
        e.check().unwrap();
        let c = classify(&e.target).unwrap();
        assert_eq!(c.family, e.target.label, "{}", e.id);
    }
}
