//! The reflection factors: the conjugate ratio `(u - iv)/(u + iv)`, `nu(s)`
//! with `zeta(s) = nu(s) zeta(1 - conj s)`, the eta ratios `theta` and
//! `kappa`, and the probe protocol that classifies the zeros and poles of
//! `nu` on the real axis.

use num_complex::Complex64;
use serde::Serialize;

use crate::error::{Result, ZetaError};
use crate::specfun::{xi_factor, ComplexValue, EvalResult, Method, EPS};
use crate::zeta::{eta, eta_factor, nearest_eta_factor_zero, zeta, EvalConfig};

/// `|zeta(s)|` below this is treated as sitting on a zero of zeta.
pub const NEAR_ZERO_ABS: f64 = 1e-9;
/// Distance from `s = 1` refused by [`nu`].
pub const NEAR_POLE_RADIUS: f64 = 1e-9;
/// Distance from a zero of `1 - 2^(1-s)` refused by [`theta`].
pub const THETA_DENOMINATOR_RADIUS: f64 = 1e-9;
/// `|eta(2s)|` below this is refused by [`kappa`].
pub const ETA_TWO_S_FLOOR: f64 = 1e-12;
/// Real-axis offsets used by [`classify_nu`].
pub const PROBE_OFFSETS: [f64; 3] = [1e-2, 1e-3, 1e-4];

/// `(u - iv) / (u + iv)`, i.e. `conj(z) / z` for `z = u + iv`.
pub fn conj_ratio(u: f64, v: f64) -> Result<ComplexValue> {
    if u == 0.0 && v == 0.0 {
        return Err(ZetaError::ZeroInput);
    }
    let m = u.abs().max(v.abs());
    let (a, b) = (u / m, v / m);
    let d = a * a + b * b;
    Ok(Complex64::new((a * a - b * b) / d, -2.0 * a * b / d))
}

/// `nu(s)` through `1/nu(s) = xi(conj s) * conj_ratio(Re zeta(s), Im zeta(s))`
/// where `xi(s) = 2 Gamma(s) (2 pi)^(-s) cos(pi s / 2)`.
pub fn nu(s: ComplexValue, cfg: &EvalConfig) -> Result<EvalResult> {
    if (s - 1.0).norm() < NEAR_POLE_RADIUS {
        return Err(ZetaError::NearPole(s));
    }
    let z = zeta(s, cfg)?;
    let za = z.value.norm();
    if za < NEAR_ZERO_ABS {
        return Err(ZetaError::NearZeroOfZeta(s, za));
    }
    let x = xi_factor(s.conj())?;
    if x.value.norm() == 0.0 {
        return Err(ZetaError::NearPole(s));
    }
    let r = conj_ratio(z.value.re, z.value.im)?;
    let value = (x.value * r).inv();
    let rel = x.abs_err_est / x.value.norm() + 2.0 * z.abs_err_est / za + 8.0 * EPS;
    Ok(EvalResult::new(value, value.norm() * rel, Method::FunctionalEquation))
}

/// `nu(s) = zeta(s) / zeta(1 - conj s)`, the direct quotient used as a
/// second route.
pub fn nu_direct(s: ComplexValue, cfg: &EvalConfig) -> Result<EvalResult> {
    if (s - 1.0).norm() < NEAR_POLE_RADIUS {
        return Err(ZetaError::NearPole(s));
    }
    let a = zeta(s, cfg)?;
    let b = zeta(Complex64::new(1.0, 0.0) - s.conj(), cfg)?;
    let bn = b.value.norm();
    if bn < NEAR_ZERO_ABS {
        return Err(ZetaError::NearZeroOfZeta(s, bn));
    }
    let value = a.value / b.value;
    let err = a.abs_err_est / bn + value.norm() * (b.abs_err_est / bn + 2.0 * EPS);
    Ok(EvalResult::new(value, err, a.method))
}

/// `theta(s) = (1 - 2/4^s) / (1 - 2/2^s)`.
pub fn theta(s: ComplexValue) -> Result<EvalResult> {
    let (_, sk) = nearest_eta_factor_zero(s);
    if (s - sk).norm() < THETA_DENOMINATOR_RADIUS {
        return Err(ZetaError::DenominatorZero(s));
    }
    let num = eta_factor(s * 2.0);
    let den = eta_factor(s);
    let value = num / den;
    let err = 8.0 * EPS * (1.0 + s.norm()) * (value.norm() + 1.0 / den.norm());
    Ok(EvalResult::new(value, err, Method::RationalApprox))
}

/// `kappa(s) = eta(s) / eta(2s)` for `Re(s) > 1/4`.
///
/// The value is returned as computed; its imaginary part is not discarded.
pub fn kappa(s: ComplexValue, cfg: &EvalConfig) -> Result<EvalResult> {
    if s.re <= 0.25 {
        return Err(ZetaError::DomainError {
            what: "kappa",
            at: s,
            domain: "Re(s) > 1/4",
        });
    }
    let e2 = eta(s * 2.0, cfg)?;
    let n2 = e2.value.norm();
    if n2 < ETA_TWO_S_FLOOR {
        return Err(ZetaError::EtaTwoSZero(s));
    }
    let e1 = eta(s, cfg)?;
    let value = e1.value / e2.value;
    let err = e1.abs_err_est / n2 + value.norm() * (e2.abs_err_est / n2 + 2.0 * EPS);
    Ok(EvalResult::new(value, err, Method::AcceleratedEta))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum NuKind {
    Zero,
    Pole,
    Regular,
}

impl std::fmt::Display for NuKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            NuKind::Zero => "zero",
            NuKind::Pole => "pole",
            NuKind::Regular => "regular",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct NuClassification {
    pub point: ComplexValue,
    pub kind: NuKind,
    /// `|nu|` at the smallest offset, or `|1/nu|` for a pole.
    pub evidence: f64,
    /// `|nu(point + delta)|` for each of [`PROBE_OFFSETS`]; NaN where the
    /// probe could not be evaluated.
    pub probes: [f64; 3],
    pub low_confidence: bool,
}

/// Classify each point as a zero, pole or regular point of `nu` by probing
/// `|nu(point + delta)|` along the real axis.
///
/// Zero: the probes decrease and the last is below `1e-3`.
/// Pole: the probes increase and the last is above `1e3`.
/// Otherwise regular; flagged low-confidence unless the probes are stable.
pub fn classify_nu(points: &[ComplexValue], cfg: &EvalConfig) -> Vec<NuClassification> {
    points.iter().map(|&p| classify_one(p, cfg)).collect()
}

fn classify_one(point: Complex64, cfg: &EvalConfig) -> NuClassification {
    let mut probes = [f64::NAN; 3];
    for (slot, &d) in probes.iter_mut().zip(PROBE_OFFSETS.iter()) {
        if let Ok(v) = nu(point + d, cfg) {
            *slot = v.value.norm();
        }
    }
    let [a, b, c] = probes;
    let finite = probes.iter().all(|x| x.is_finite());
    let (kind, evidence, low_confidence) = if !finite {
        (NuKind::Regular, f64::NAN, true)
    } else if a > b && b > c && c < 1e-3 {
        (NuKind::Zero, c, false)
    } else if a < b && b < c && c > 1e3 {
        (NuKind::Pole, 1.0 / c, false)
    } else {
        let hi = a.max(b).max(c);
        let lo = a.min(b).min(c);
        (NuKind::Regular, c, !(lo > 0.0 && hi / lo < 2.0))
    };
    NuClassification {
        point,
        kind,
        evidence,
        probes,
        low_confidence,
    }
}
