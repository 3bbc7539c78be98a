use std::f64::consts::PI;

use iwcon::algebra::{CaseId, Rational};
use iwcon::reps::realizations::*;
use iwcon::reps::{
    apply, commutator_residual, iso2_ladder, realize, su2_ladder, ContractionCase, ParamPath,
    RepRealization,
};
use iwcon::spaces::{bump, bump2, midpoint_grid, BesselMode, DeformedHarmonic, Func, FunctionSpace};
use num_complex::Complex64;

const HOM_TOL: f64 = 1e-8;

fn line_grid(a: f64, b: f64) -> Vec<[f64; 2]> {
    midpoint_grid(a, b, 200).into_iter().map(|x| [x, 0.0]).collect()
}

fn plane_grid(t: (f64, f64), p: (f64, f64)) -> Vec<[f64; 2]> {
    let mut g = Vec::new();
    for x in midpoint_grid(t.0, t.1, 20) {
        for y in midpoint_grid(p.0, p.1, 10) {
            g.push([x, y]);
        }
    }
    g
}

fn line_probes() -> Vec<Func> {
    vec![bump(0.0, 1.0), bump(0.7, 1.5), bump(-1.2, 0.8)]
}

fn check_line(rep: &RepRealization) {
    let r = commutator_residual(rep, &line_probes(), &line_grid(-3.0, 3.0)).unwrap();
    assert!(r <= HOM_TOL, "{}: residual {r}", rep.name);
}

#[test]
fn solvable_families_are_homomorphisms() {
    check_line(&ea_rep(1.0, -1.0, 1.0));
    check_line(&iso2_rep(1.0, 0.5, 1.0, FunctionSpace::vanishing_interval(-PI, PI).unwrap()));
    for lambda in [Rational::from_int(-1), Rational::new(1, 2), Rational::from_int(2)] {
        check_line(&g_rep(1.0, -1.0, &lambda, 1.0));
        check_line(&l_rep(0.5, 1.0, &lambda, 1.0));
    }
    check_line(&c_rep(1.0, 0.3, 1.0));
    check_line(&h_rep(1.0));
    check_line(&iso11_rep(1.0, 1.0));
}

#[test]
fn principal_series_is_a_homomorphism() {
    let space = FunctionSpace::vanishing_interval(-PI, PI).unwrap();
    for plus in [true, false] {
        check_line(&principal_series(1.0, plus, 1.0, space));
        check_line(&principal_series(-0.7, plus, 0.5, space));
    }
}

#[test]
fn kirillov_model_is_a_homomorphism() {
    let probes = vec![bump(1.0, 0.5), bump(1.3, 0.6), bump(0.9, 0.3)];
    let grid = line_grid(0.5, 2.0);
    for n in 2..=6 {
        for sign in [1.0, -1.0] {
            let r = commutator_residual(&kirillov(n, sign), &probes, &grid).unwrap();
            assert!(r <= HOM_TOL, "n = {n}, sign {sign}: {r}");
        }
    }
    let r = commutator_residual(&iso11_rep(-1.0, 2.0), &probes, &grid).unwrap();
    assert!(r <= 1e-12);
}

#[test]
fn su2_and_polar_iso2_are_homomorphisms() {
    let probes: Vec<Func> = vec![
        bump2([1.5, 3.0], [0.8, 1.5]),
        bump2([1.0, 2.0], [0.5, 1.0]),
        DeformedHarmonic::new(3, 1, 1.0).into_func(),
    ];
    let grid = plane_grid((0.3, 2.8), (0.1, 6.2));
    for l in 1..=6 {
        let r = commutator_residual(&su2_rep(l, 1.0).unwrap(), &probes, &grid).unwrap();
        assert!(r <= HOM_TOL, "l = {l}: {r}");
    }
    let polar: Vec<Func> = vec![bump2([1.5, 3.0], [0.8, 1.5]), BesselMode::new(1.0, 2).into_func()];
    let r = commutator_residual(&iso2_polar(1.0), &polar, &plane_grid((0.3, 3.0), (0.1, 6.2))).unwrap();
    assert!(r <= HOM_TOL, "{r}");
}

#[test]
fn every_case_family_and_limit_is_a_homomorphism() {
    for id in CaseId::ALL {
        let case = ContractionCase::new(id, ParamPath::default()).unwrap();
        let eps = match id {
            CaseId::Su2ToIso2 => 1.0 / 6.0,
            CaseId::Sl2ToIso11 => 4.0 / 25.0,
            _ => 1.0,
        };
        let fam = case.family(eps).unwrap();
        let lim = case.limit_rep();
        match id {
            CaseId::Su2ToIso2 => {
                let probes: Vec<Func> = vec![DeformedHarmonic::new(6, 2, eps).into_func()];
                let g = plane_grid((0.5, 15.0), (0.1, 6.2));
                assert!(commutator_residual(&fam, &probes, &g).unwrap() <= HOM_TOL);
                let b: Vec<Func> = vec![BesselMode::new(1.0, -2).into_func()];
                assert!(commutator_residual(&lim, &b, &g).unwrap() <= HOM_TOL);
            }
            CaseId::Sl2ToIso11 => {
                let probes = vec![bump(1.0, 0.5)];
                let g = line_grid(0.5, 1.5);
                assert!(commutator_residual(&fam, &probes, &g).unwrap() <= HOM_TOL);
                assert!(commutator_residual(&lim, &probes, &g).unwrap() <= HOM_TOL);
            }
            _ => {
                check_line(&fam);
                check_line(&lim);
            }
        }
    }
}

#[test]
fn ea_example_at_eps_one() {
    let rep = realize(CaseId::EaToH, &ParamPath::default(), 1.0).unwrap();
    let f = bump(0.0, 1.0);
    let x = 0.3;
    let fx = f.value([x, 0.0]).unwrap();
    let i = Complex64::new(0.0, 1.0);
    let x1 = apply(&rep.assign[0], &f).value([x, 0.0]).unwrap();
    assert!((x1 - i * -1.0 * (-x).exp() * fx).norm() < 1e-15);
    let x2 = apply(&rep.assign[1], &f).value([x, 0.0]).unwrap();
    assert!((x2 - i * fx).norm() < 1e-15);
    let x3 = apply(&rep.assign[2], &f).value([x, 0.0]).unwrap();
    assert!((x3 + f.gradient([x, 0.0]).unwrap()[0]).norm() < 1e-15);
}

#[test]
fn kirillov_y_at_n_three() {
    // Y = X1 + X3 ↦ −2i/x + ix d²/dx²
    let rep = kirillov(3, 1.0);
    let y = rep.op([1.0, 0.0, 1.0]);
    let f = bump(1.0, 0.5);
    let x = 1.1;
    let got = apply(&y, &f).value([x, 0.0]).unwrap();
    let i = Complex64::new(0.0, 1.0);
    let want = -2.0 * i / x * f.value([x, 0.0]).unwrap() + i * x * f.hessian([x, 0.0]).unwrap()[0][0];
    assert!((got - want).norm() < 1e-13);
}

#[test]
fn su2_ladder_matches_operators() {
    let eps = 0.8;
    let grid = plane_grid((0.2, 3.5), (0.1, 6.2));
    for l in 0..=6 {
        let rep = su2_rep(l, eps).unwrap();
        for m in -l..=l {
            let chi = DeformedHarmonic::new(l, m, eps).into_func();
            for k in 0..3 {
                let lhs = apply(&rep.assign[k], &chi);
                let ladder = su2_ladder(l, m, k).unwrap();
                for &p in &grid {
                    let mut rhs = Complex64::new(0.0, 0.0);
                    for (&mp, &c) in &ladder {
                        rhs += c * DeformedHarmonic::new(l, mp, eps).into_func().value(p).unwrap();
                    }
                    let got = lhs.value(p).unwrap();
                    assert!((got - rhs).norm() < 1e-8, "l={l} m={m} X{} at {p:?}", k + 1);
                }
            }
        }
    }
}

#[test]
fn x3_is_diagonal_on_harmonics() {
    let rep = su2_rep(5, 0.3).unwrap();
    for m in -5..=5 {
        let chi = DeformedHarmonic::new(5, m, 0.3).into_func();
        let v = apply(&rep.assign[2], &chi);
        for p in [[1.0, 0.4], [7.0, 2.5]] {
            let want = Complex64::new(0.0, m as f64) * chi.value(p).unwrap();
            assert!((v.value(p).unwrap() - want).norm() < 1e-13);
        }
    }
}

#[test]
fn iso2_ladder_matches_polar_operators() {
    let rep = iso2_polar(1.3);
    for m in -3..=3 {
        let bm = BesselMode::new(1.3, m).into_func();
        for k in 0..3 {
            let lhs = apply(&rep.assign[k], &bm);
            let ladder = iso2_ladder(1.3, m, k).unwrap();
            for p in [[0.7, 0.2], [2.5, 4.0], [6.0, 1.1]] {
                let mut rhs = Complex64::new(0.0, 0.0);
                for (&mp, &c) in &ladder {
                    rhs += c * BesselMode::new(1.3, mp).into_func().value(p).unwrap();
                }
                assert!((lhs.value(p).unwrap() - rhs).norm() < 1e-10, "m={m} X{}", k + 1);
            }
        }
    }
}

#[test]
fn scaled_x2_ladder_entry_decreases_to_the_limit() {
    let r = 1.0;
    let m = 1;
    let mut prev = f64::INFINITY;
    for l in [10, 20, 50, 100, 200, 1000] {
        let c = su2_ladder(l, m, 1).unwrap()[&(m - 1)] * (r / l as f64);
        let err = (c - Complex64::new(0.0, -r / 2.0)).norm();
        assert!(err < prev);
        prev = err;
    }
    assert!(prev < 1e-3);
}

#[test]
fn invalid_parameters_are_rejected() {
    let bad_g = ParamPath {
        lambda: Some(Rational::one()),
        ..ParamPath::default()
    };
    assert!(ContractionCase::new(CaseId::GLambdaToH, bad_g).is_err());
    let bad_l = ParamPath {
        lambda: Some(Rational::zero()),
        ..ParamPath::default()
    };
    assert!(ContractionCase::new(CaseId::LLambdaToH, bad_l).is_err());
    let bad_b = ParamPath { b: -1.0, ..ParamPath::default() };
    assert!(ContractionCase::new(CaseId::Sl2ToIso11, bad_b).is_err());
    assert!(realize(CaseId::EaToH, &ParamPath::default(), 0.0).is_err());
}
