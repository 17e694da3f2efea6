//! Complex special functions shared by every evaluator: Gamma, the
//! reciprocal Gamma (Lanczos route and truncated Euler product), the half
//! cosine `cos(pi s / 2)` and the reflection factor
//! `xi(s) = 2 Gamma(s) (2 pi)^(-s) cos(pi s / 2)`.
//!
//! All routines are written so that `f(conj(s)) == conj(f(s))` holds bit for
//! bit: only conjugation-symmetric complex arithmetic and odd/even real
//! functions are used, and complex powers always go through the principal
//! logarithm.

use std::f64::consts::PI;
use std::fmt;

use num_complex::Complex64;
use serde::Serialize;

use crate::error::{Result, ZetaError};

/// The universal scalar: `re + i im` in double precision.
pub type ComplexValue = Complex64;

pub(crate) const EPS: f64 = f64::EPSILON;

/// Distance below which an argument is treated as sitting on a Gamma pole.
pub const POLE_TOLERANCE: f64 = 1e-12;

/// `|Im(s)|` above which [`half_cos`] refuses to evaluate.
pub const HALF_COS_IM_LIMIT: f64 = 700.0 / PI;

/// Which representation produced an [`EvalResult`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    DirectSeries,
    AcceleratedEta,
    FunctionalEquation,
    Quadrature,
    EulerProduct,
    RationalApprox,
}

impl Method {
    pub fn as_str(self) -> &'static str {
        match self {
            Method::DirectSeries => "direct-series",
            Method::AcceleratedEta => "accelerated-eta",
            Method::FunctionalEquation => "functional-equation",
            Method::Quadrature => "quadrature",
            Method::EulerProduct => "euler-product",
            Method::RationalApprox => "rational-approx",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// A value together with the absolute error the evaluator commits to.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EvalResult {
    pub value: ComplexValue,
    pub abs_err_est: f64,
    pub method: Method,
}

impl EvalResult {
    pub fn new(value: ComplexValue, abs_err_est: f64, method: Method) -> Self {
        Self {
            value,
            abs_err_est,
            method,
        }
    }
}

/// `(sin(pi x), cos(pi x))` with exact argument reduction, so integers and
/// half-integers give exact zeros and the sine is exactly odd.
pub(crate) fn sincos_pi(x: f64) -> (f64, f64) {
    let r = x % 2.0;
    let n = (2.0 * r).round();
    let f = r - 0.5 * n;
    let (s, c) = (PI * f).sin_cos();
    match (n as i64).rem_euclid(4) {
        0 => (s, c),
        1 => (c, -s),
        2 => (-s, -c),
        _ => (-c, s),
    }
}

/// `sin(pi z)` from the real/imaginary decomposition.
pub(crate) fn sin_pi(z: Complex64) -> Complex64 {
    let (s, c) = sincos_pi(z.re);
    let y = PI * z.im;
    Complex64::new(s * y.cosh(), c * y.sinh())
}

/// `exp(z) - 1` without cancellation near `z = 0`.
pub(crate) fn expm1_c(z: Complex64) -> Complex64 {
    let half = (0.5 * z.im).sin();
    let re = z.re.exp_m1() * z.im.cos() - 2.0 * half * half;
    Complex64::new(re, z.re.exp() * z.im.sin())
}

/// `b^(-s)` for a real base `b > 0`, written as
/// `b^(-re) [cos(im ln b) - i sin(im ln b)]`.
pub(crate) fn real_pow_neg(b: f64, s: Complex64) -> Complex64 {
    let lb = b.ln();
    let mag = b.powf(-s.re);
    let (sn, cs) = (s.im * lb).sin_cos();
    Complex64::new(mag * cs, -mag * sn)
}

const LANCZOS_G: f64 = 7.0;
const LANCZOS_COEFFS: [f64; 9] = [
    0.999_999_999_999_809_9,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_1,
    -176.615_029_162_140_6,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_572e-6,
    1.505_632_735_149_311_6e-7,
];
const HALF_LN_TWO_PI: f64 = 0.918_938_533_204_672_8;

/// Lanczos `ln Gamma(z)` for `Re(z) >= 0.5`; the imaginary part is not
/// reduced to the principal branch, only `exp` of it is meaningful.
fn ln_gamma_right(z: Complex64) -> Complex64 {
    debug_assert!(z.re >= 0.5);
    let zm = z - 1.0;
    let mut acc = Complex64::new(LANCZOS_COEFFS[0], 0.0);
    for (i, &c) in LANCZOS_COEFFS.iter().enumerate().skip(1) {
        acc += Complex64::new(c, 0.0) / (zm + i as f64);
    }
    let t = zm + (LANCZOS_G + 0.5);
    (zm + 0.5) * t.ln() - t + acc.ln() + HALF_LN_TWO_PI
}

fn lanczos_rel_err(w: Complex64, lg: Complex64) -> f64 {
    EPS * (16.0 + 2.0 * lg.norm() + 2.0 * w.norm())
}

fn nearest_pole(s: Complex64) -> Option<f64> {
    if s.re > 0.5 {
        return None;
    }
    let k = s.re.round();
    if k <= 0.0 && (s - k).norm() < POLE_TOLERANCE {
        Some(k)
    } else {
        None
    }
}

/// Gamma via the Lanczos rational approximation (g = 7, nine coefficients),
/// with the reflection formula for `Re(s) < 0.5`.
pub fn gamma(s: ComplexValue) -> Result<EvalResult> {
    if nearest_pole(s).is_some() {
        return Err(ZetaError::PoleAtNonPositiveInteger(s));
    }
    if s.re >= 0.5 {
        let lg = ln_gamma_right(s);
        if lg.re > 709.0 {
            return Err(ZetaError::Overflow { what: "gamma", at: s });
        }
        let v = lg.exp();
        let rel = lanczos_rel_err(s, lg);
        return Ok(EvalResult::new(v, rel * v.norm(), Method::RationalApprox));
    }
    // Gamma(s) = pi / (sin(pi s) Gamma(1 - s))
    let w = Complex64::new(1.0, 0.0) - s;
    let lg = ln_gamma_right(w);
    let sp = sin_pi(s);
    if (-lg.re) > 709.0 || !sp.norm().is_finite() {
        return Err(ZetaError::Overflow { what: "gamma", at: s });
    }
    let v = (-lg).exp() * PI / sp;
    if !v.re.is_finite() || !v.im.is_finite() {
        return Err(ZetaError::Overflow { what: "gamma", at: s });
    }
    let rel = lanczos_rel_err(w, lg) + EPS * (4.0 + PI * s.norm());
    Ok(EvalResult::new(v, rel * v.norm(), Method::RationalApprox))
}

/// `1 / Gamma(s)` with exact zeros at the non-positive integers.
/// Returns the value and a relative error estimate.
pub(crate) fn recip_gamma(s: Complex64) -> (Complex64, f64) {
    if s.re >= 0.5 {
        let lg = ln_gamma_right(s);
        return ((-lg).exp(), lanczos_rel_err(s, lg));
    }
    let w = Complex64::new(1.0, 0.0) - s;
    let lg = ln_gamma_right(w);
    let v = sin_pi(s) * lg.exp() / PI;
    (v, lanczos_rel_err(w, lg) + EPS * (4.0 + PI * s.norm()))
}

/// `ln |Gamma(x)|` for real `x > 0`.
pub(crate) fn ln_gamma_real(x: f64) -> f64 {
    debug_assert!(x > 0.0);
    if x >= 0.5 {
        ln_gamma_right(Complex64::new(x, 0.0)).re
    } else {
        // Gamma(x) = Gamma(x + 1) / x
        ln_gamma_right(Complex64::new(x + 1.0, 0.0)).re - x.ln()
    }
}

/// `ln |Gamma(s)|`, finite away from the poles.
pub(crate) fn ln_abs_gamma(s: Complex64) -> f64 {
    if s.re >= 0.5 {
        ln_gamma_right(s).re
    } else {
        let w = Complex64::new(1.0, 0.0) - s;
        PI.ln() - sin_pi(s).norm().ln() - ln_gamma_right(w).re
    }
}

/// The truncated Euler product
/// `1/Gamma(s) ~ s * prod_{n <= terms} (1 + s/n) / (1 + 1/n)^s`.
///
/// Non-positive integers return an exact zero whatever the truncation.
/// The error estimate uses the tail `prod_{n > T} ~ exp(s (1 - s) / (2T))`.
pub fn recip_gamma_euler(s: ComplexValue, terms: usize) -> EvalResult {
    let terms = terms.max(1);
    if s.im == 0.0 && s.re <= 0.0 && s.re.fract() == 0.0 {
        return EvalResult::new(Complex64::new(0.0, 0.0), 0.0, Method::EulerProduct);
    }
    let mut prod = s;
    for n in 1..=terms {
        let nf = n as f64;
        let shrink = (-s * (1.0 / nf).ln_1p()).exp();
        prod *= (s / nf + 1.0) * shrink;
    }
    let tail = (s * (Complex64::new(1.0, 0.0) - s)).norm() / (2.0 * terms as f64);
    let err = prod.norm() * (1.05 * tail + 4.0 * EPS * terms as f64);
    EvalResult::new(prod, err, Method::EulerProduct)
}

/// `cos(pi s / 2) = cos(pi a/2) cosh(pi b/2) - i sin(pi a/2) sinh(pi b/2)`.
pub fn half_cos(s: ComplexValue) -> Result<ComplexValue> {
    if s.im.abs() > HALF_COS_IM_LIMIT {
        return Err(ZetaError::Overflow {
            what: "half_cos",
            at: s,
        });
    }
    let (sn, cs) = sincos_pi(0.5 * s.re);
    let y = 0.5 * PI * s.im;
    Ok(Complex64::new(cs * y.cosh(), -(sn * y.sinh())))
}

/// `xi(s) = 2 Gamma(s) (2 pi)^(-s) cos(pi s / 2)`, so that
/// `zeta(1 - s) = xi(s) zeta(s)`.
pub fn xi_factor(s: ComplexValue) -> Result<EvalResult> {
    let g = gamma(s)?;
    let hc = half_cos(s)?;
    let p = real_pow_neg(2.0 * PI, s);
    let gp = g.value * p * 2.0;
    let value = gp * hc;
    let y = 0.5 * PI * s.im;
    let hc_scale = y.cosh().max(1.0);
    let err = g.abs_err_est * 2.0 * p.norm() * hc.norm()
        + gp.norm() * EPS * (4.0 * hc.norm() + hc_scale * (2.0 + s.norm()))
        + value.norm() * EPS * (4.0 + 2.0 * s.norm() * (2.0 * PI).ln());
    Ok(EvalResult::new(value, err, Method::RationalApprox))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn sincos_pi_exact_points() {
        assert_eq!(sincos_pi(1.0).0, 0.0);
        assert_eq!(sincos_pi(-3.0).0, 0.0);
        assert_eq!(sincos_pi(0.5).1, 0.0);
        assert_eq!(sincos_pi(0.5).0, 1.0);
        assert_eq!(sincos_pi(-0.5).0, -1.0);
        for &x in &[0.1, 0.37, 1.3, 2.75, -4.2, 123.456] {
            let (s, cs) = sincos_pi(x);
            assert!((s - (PI * x).sin()).abs() < 1e-13, "{x}");
            assert!((cs - (PI * x).cos()).abs() < 1e-13, "{x}");
            assert_eq!(sincos_pi(-x).0, -s);
            assert_eq!(sincos_pi(-x).1, cs);
        }
    }

    #[test]
    fn gamma_factorials() {
        let mut fact = 1.0;
        for n in 1..=15 {
            let g = gamma(c(n as f64, 0.0)).unwrap();
            assert!((g.value.re - fact).abs() <= g.abs_err_est.max(1e-300), "n={n}");
            assert!((g.value.re - fact).abs() / fact < 1e-13);
            fact *= n as f64;
        }
        let g5 = gamma(c(5.0, 0.0)).unwrap();
        assert!((g5.value - 24.0).norm() < 1e-12);
    }

    #[test]
    fn gamma_half_integer_and_critical_line_modulus() {
        let g = gamma(c(0.5, 0.0)).unwrap();
        assert!((g.value.re - PI.sqrt()).abs() < 1e-14);
        // |Gamma(1/2 + it)|^2 = pi / cosh(pi t)
        for &t in &[0.3, 1.0, 5.0, 14.0, 30.0, 49.0] {
            let g = gamma(c(0.5, t)).unwrap();
            let exact = (PI / (PI * t).cosh()).sqrt();
            let rel = (g.value.norm() - exact).abs() / exact;
            assert!(rel < 1e-12, "t={t} rel={rel}");
            assert!(g.abs_err_est <= 1e-12 * g.value.norm());
        }
        // |Gamma(1 + it)|^2 = pi t / sinh(pi t)
        for &t in &[0.5, 3.0, 20.0] {
            let g = gamma(c(1.0, t)).unwrap();
            let exact = (PI * t / (PI * t).sinh()).sqrt();
            assert!((g.value.norm() - exact).abs() / exact < 1e-13);
        }
    }

    #[test]
    fn gamma_recurrence_and_reflection() {
        // s Gamma(s) = Gamma(s + 1)
        let s = c(0.3, 2.0);
        let lhs = gamma(s + 1.0).unwrap().value;
        let rhs = s * gamma(s).unwrap().value;
        assert!((lhs / rhs - 1.0).norm() < 1e-10);
        // Gamma(s) Gamma(1 - s) = pi / sin(pi s)
        for &s in &[c(-2.3, 0.7), c(-0.5, 0.0), c(0.2, -4.0), c(-7.9, 12.0)] {
            let prod = gamma(s).unwrap().value * gamma(c(1.0, 0.0) - s).unwrap().value;
            let want = PI / sin_pi(s);
            assert!((prod / want - 1.0).norm() < 1e-12, "{s}");
        }
        let g = gamma(c(-0.5, 0.0)).unwrap();
        assert!((g.value.re + 2.0 * PI.sqrt()).abs() < 1e-13);
    }

    #[test]
    fn gamma_poles_are_errors() {
        for k in 0..6 {
            let s = c(-(k as f64), 0.0);
            assert!(matches!(gamma(s), Err(ZetaError::PoleAtNonPositiveInteger(_))));
        }
        assert!(matches!(
            gamma(c(-2.0 + 1e-13, 0.0)),
            Err(ZetaError::PoleAtNonPositiveInteger(_))
        ));
        assert!(gamma(c(-2.0 + 1e-9, 0.0)).is_ok());
    }

    #[test]
    fn recip_gamma_zeros_and_consistency() {
        for k in 0..5 {
            let (v, _) = recip_gamma(c(-(k as f64), 0.0));
            assert_eq!(v.norm(), 0.0);
        }
        for &s in &[c(2.5, 0.0), c(0.3, 4.0), c(-1.7, 2.0)] {
            let (r, _) = recip_gamma(s);
            let g = gamma(s).unwrap().value;
            assert!((r * g - 1.0).norm() < 1e-13);
        }
    }

    #[test]
    fn recip_gamma_euler_examples() {
        assert_eq!(recip_gamma_euler(c(-3.0, 0.0), 1).value.norm(), 0.0);
        assert_eq!(recip_gamma_euler(c(-3.0, 0.0), 1_000).value.norm(), 0.0);
        let one = recip_gamma_euler(c(1.0, 0.0), 7).value;
        assert!((one - 1.0).norm() < 1e-14);
        let r = recip_gamma_euler(c(2.5, 0.0), 1_000_000);
        let exact = 1.0 / gamma(c(2.5, 0.0)).unwrap().value.re;
        assert!((r.value.re - exact).abs() < 1e-5);
        assert!((r.value.re - exact).abs() <= r.abs_err_est);
    }

    #[test]
    fn recip_gamma_euler_error_decays() {
        let s = c(2.5, 0.0);
        let exact = 1.0 / gamma(s).unwrap().value.re;
        let errs: Vec<f64> = [1_000, 10_000, 100_000]
            .iter()
            .map(|&t| (recip_gamma_euler(s, t).value.re - exact).abs())
            .collect();
        assert!(errs[0] > errs[1] && errs[1] > errs[2], "{errs:?}");
    }

    #[test]
    fn half_cos_examples() {
        assert_eq!(half_cos(c(1.0, 0.0)).unwrap().norm(), 0.0);
        assert_eq!(half_cos(c(-3.0, 0.0)).unwrap().norm(), 0.0);
        let s = c(0.4, 7.0);
        assert_eq!(half_cos(s.conj()).unwrap(), half_cos(s).unwrap().conj());
        let z = c(0.4, 1.3);
        let generic = (z * (PI / 2.0)).cos();
        assert!((half_cos(z).unwrap() - generic).norm() < 1e-14);
        assert!(matches!(
            half_cos(c(0.0, 300.0)),
            Err(ZetaError::Overflow { .. })
        ));
    }

    #[test]
    fn xi_factor_examples() {
        let s = c(0.3, 4.0);
        let a = xi_factor(s.conj()).unwrap().value;
        let b = xi_factor(s).unwrap().value.conj();
        assert!((a - b).norm() <= 1e-12 * b.norm());
        assert_eq!(xi_factor(c(3.0, 0.0)).unwrap().value.norm(), 0.0);
        // zeta(-1) / zeta(2) = (-1/12) / (pi^2/6)
        let x2 = xi_factor(c(2.0, 0.0)).unwrap();
        let want = (-1.0 / 12.0) / (PI * PI / 6.0);
        assert!((x2.value.re - want).abs() < 1e-14);
    }
}
