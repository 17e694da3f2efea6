//! Independent evaluation routes agree with each other and with closed forms.

use std::f64::consts::PI;

use num_complex::Complex64;
use zetalab::zeta::{
    eta, eta_integral, eta_integral_bound, eta_integral_raw, euler_product, log_deriv_numeric, log_deriv_zeta, zeta,
    zeta_floor_integral, zeta_reflect,
};
use zetalab::{EvalConfig, Method, ZetaError};

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

/// zeta(2k) = (-1)^(k+1) B_2k (2 pi)^(2k) / (2 (2k)!)
#[test]
fn even_integers_match_bernoulli_closed_forms() {
    let cfg = EvalConfig::default();
    let expect = [
        (2.0, PI.powi(2) / 6.0),
        (4.0, PI.powi(4) / 90.0),
        (6.0, PI.powi(6) / 945.0),
        (8.0, PI.powi(8) / 9450.0),
        (10.0, PI.powi(10) / 93555.0),
    ];
    for (s, v) in expect {
        let z = zeta(c(s, 0.0), &cfg).unwrap();
        assert!((z.value.re - v).abs() < 1e-13 * v, "zeta({s})");
        assert!(z.abs_err_est < 1e-12);
    }
}

/// zeta(1 - 2k) = -B_2k / (2k)
#[test]
fn negative_odd_integers_match_bernoulli_values() {
    let cfg = EvalConfig::default();
    let expect = [(-1.0, -1.0 / 12.0), (-3.0, 1.0 / 120.0), (-5.0, -1.0 / 252.0), (-7.0, 1.0 / 240.0)];
    for (s, v) in expect {
        let z = zeta(c(s, 0.0), &cfg).unwrap();
        assert_eq!(z.method, Method::FunctionalEquation);
        assert!((z.value.re - v).abs() < 1e-13, "zeta({s}) = {}", z.value);
    }
}

#[test]
fn trivial_zeros_are_exact() {
    let cfg = EvalConfig::default();
    for k in 1..=10 {
        assert_eq!(zeta(c(-2.0 * k as f64, 0.0), &cfg).unwrap().value.norm(), 0.0);
    }
}

#[test]
fn zeta_half_matches_reference() {
    // zeta(1/2) = -1.4603545088095868128...
    let z = zeta(c(0.5, 0.0), &EvalConfig::default()).unwrap();
    assert!((z.value.re + 1.460_354_508_809_586_8).abs() < 1e-13);
}

#[test]
fn floor_integral_and_euler_product_track_the_series() {
    let cfg = EvalConfig::default();
    for s in [c(1.5, 0.0), c(2.0, 7.0), c(3.5, -20.0), c(1.2, 14.0)] {
        let a = zeta(s, &cfg).unwrap().value;
        let b = zeta_floor_integral(s, &cfg).unwrap();
        assert!((a - b.value).norm() < 1e-8, "floor integral at {s}");
        assert!((a - b.value).norm() <= b.abs_err_est + 1e-12);
        let e = euler_product(s, 1_000_000).unwrap();
        assert!((a - e.value).norm() <= e.abs_err_est, "euler product at {s}");
    }
}

#[test]
fn eta_integral_tracks_the_accelerated_series() {
    let cfg = EvalConfig::default();
    for s in [c(0.3, 0.0), c(0.5, 14.0), c(0.9, -3.0), c(1.5, 2.0), c(2.5, 0.5)] {
        let a = eta(s, &cfg).unwrap().value;
        let b = eta_integral(s, &cfg).unwrap();
        let d = (a - b.value).norm();
        assert!(d <= b.abs_err_est + 1e-12, "eta at {s}: {d} vs {}", b.abs_err_est);
        if s.im.abs() < 5.0 {
            assert!(d < 1e-8, "eta at {s}: {d}");
        }
    }
    assert!(eta_integral(c(0.0, 1.0), &cfg).is_err());
}

#[test]
fn strip_bound_dominates_the_raw_integral() {
    for alpha in [0.1, 0.3, 0.5, 0.7, 0.9] {
        let bound = eta_integral_bound(alpha);
        for t in [0.0, 1.0, 5.0, 20.0] {
            let v = eta_integral_raw(c(alpha, t), 1e-10).unwrap().value.norm();
            assert!(v <= bound, "alpha {alpha}, t {t}: {v} > {bound}");
        }
    }
}

#[test]
fn reflection_agrees_with_direct_routes_off_the_strip() {
    let cfg = EvalConfig::default();
    for s in [c(2.5, 3.0), c(-2.5, 10.0), c(0.3, 25.0)] {
        let a = zeta(s, &cfg).unwrap().value;
        let b = zeta_reflect(s, &cfg).unwrap().value;
        assert!((a - b).norm() < 1e-10 * a.norm().max(1.0), "{s}");
    }
    assert!(matches!(zeta_reflect(c(3.0, 0.0), &cfg), Err(ZetaError::PoleAtNonPositiveInteger(_))));
}

#[test]
fn log_derivative_routes() {
    let cfg = EvalConfig::default();
    for s in [c(2.0, 0.0), c(2.5, 10.0), c(4.0, -3.0)] {
        let a = log_deriv_zeta(s, 200_000).unwrap();
        let b = log_deriv_numeric(s, 1e-4, &cfg).unwrap();
        assert!((a.value - b).norm() < a.abs_err_est + 1e-8, "{s}: {}", (a.value - b).norm());
    }
    // the pole residue seen through the numeric route
    let eps = 1e-4;
    let w = log_deriv_numeric(c(1.0 + eps, 0.0), eps / 10.0, &cfg).unwrap() * eps;
    assert!((w.re + 1.0).abs() < 1e-2);
}

#[test]
fn dispatch_boundaries_are_continuous() {
    let cfg = EvalConfig::default();
    for t in [0.5, 5.0, 30.0] {
        for re in [1.5, 0.0] {
            let a = zeta(c(re + 1e-9, t), &cfg).unwrap().value;
            let b = zeta(c(re - 1e-9, t), &cfg).unwrap().value;
            assert!((a - b).norm() < 1e-7, "Re = {re}, t = {t}");
        }
    }
    let a = zeta(c(-1e-3 - 1e-9, 0.0), &cfg).unwrap().value;
    let b = zeta(c(-1e-3 + 1e-9, 0.0), &cfg).unwrap().value;
    assert!((a - b).norm() < 1e-8);
}
