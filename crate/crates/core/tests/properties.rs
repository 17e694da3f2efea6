use num_complex::Complex64;
use proptest::prelude::*;

use zetalab::arith::{build_table, dirichlet_convolve, sigma_paper, CoeffSeq};
use zetalab::reflect::{conj_ratio, theta};
use zetalab::specfun::gamma;
use zetalab::zeta::{eta, zeta};
use zetalab::EvalConfig;

fn nonzero_pair() -> impl Strategy<Value = (f64, f64)> {
    (-1e6f64..1e6, -1e6f64..1e6).prop_filter("not both zero", |(u, v)| *u != 0.0 || *v != 0.0)
}

fn int_seq(n: usize) -> impl Strategy<Value = CoeffSeq> {
    prop::collection::vec(-5i32..=5, n).prop_map(|v| CoeffSeq::from_vec(v.into_iter().map(f64::from).collect()))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn conj_ratio_is_unimodular_and_conjugates((u, v) in nonzero_pair()) {
        let r = conj_ratio(u, v).unwrap();
        prop_assert!((r.norm() - 1.0).abs() < 1e-14);
        let z = Complex64::new(u, v);
        prop_assert!((r * z - z.conj()).norm() <= 1e-14 * z.norm());
    }

    #[test]
    fn gamma_commutes_with_conjugation(re in -6.0f64..6.0, im in -40.0f64..40.0) {
        let s = Complex64::new(re, im);
        prop_assume!(im.abs() > 1e-3 || (re - re.round()).abs() > 1e-3 || re > 0.5);
        let a = gamma(s).unwrap().value;
        let b = gamma(s.conj()).unwrap().value;
        prop_assert_eq!(b, a.conj());
    }

    #[test]
    fn zeta_commutes_with_conjugation(re in -8.0f64..8.0, im in -60.0f64..60.0) {
        let s = Complex64::new(re, im);
        let cfg = EvalConfig::default();
        match (zeta(s, &cfg), zeta(s.conj(), &cfg)) {
            (Ok(a), Ok(b)) => prop_assert_eq!(b.value, a.value.conj()),
            (Err(_), Err(_)) => {}
            _ => prop_assert!(false, "only one of s, conj s evaluated"),
        }
    }

    #[test]
    fn eta_and_zeta_agree_through_the_factor(re in 0.05f64..3.0, im in 0.5f64..40.0) {
        let s = Complex64::new(re, im);
        let cfg = EvalConfig::default();
        let z = zeta(s, &cfg).unwrap();
        let e = eta(s, &cfg).unwrap();
        let factor = Complex64::new(1.0, 0.0) - Complex64::new(2.0, 0.0).powc(Complex64::new(1.0, 0.0) - s);
        prop_assert!((e.value - factor * z.value).norm() < 1e-10 * (1.0 + e.value.norm()));
    }

    #[test]
    fn theta_has_no_zeros_in_the_open_strip(re in 0.55f64..0.95, im in -40.0f64..40.0) {
        let t = theta(Complex64::new(re, im)).unwrap();
        prop_assert!(t.value.norm() > 0.0);
    }

    #[test]
    fn convolution_commutes(f in int_seq(512), g in int_seq(512)) {
        let a = dirichlet_convolve(&f, &g).unwrap();
        let b = dirichlet_convolve(&g, &f).unwrap();
        prop_assert_eq!(a.as_slice(), b.as_slice());
    }

    #[test]
    fn convolution_associates(f in int_seq(512), g in int_seq(512), h in int_seq(512)) {
        let a = dirichlet_convolve(&dirichlet_convolve(&f, &g).unwrap(), &h).unwrap();
        let b = dirichlet_convolve(&f, &dirichlet_convolve(&g, &h).unwrap()).unwrap();
        prop_assert_eq!(a.as_slice(), b.as_slice());
    }

    #[test]
    fn delta_is_the_convolution_identity(f in int_seq(300)) {
        let d = CoeffSeq::delta(300);
        let fd = dirichlet_convolve(&f, &d).unwrap();
        prop_assert_eq!(fd.as_slice(), f.as_slice());
    }

    #[test]
    fn sigma_collapses_to_indicator_of_two(n in 1u64..200_000) {
        prop_assert_eq!(sigma_paper(n), i64::from(n == 2));
    }
}

#[test]
fn liouville_is_completely_multiplicative() {
    let t = build_table(20_000).unwrap();
    let l = t.liouville();
    for a in 1..=140 {
        for b in 1..=140 {
            assert_eq!(l[a * b], l[a] * l[b]);
        }
    }
}
