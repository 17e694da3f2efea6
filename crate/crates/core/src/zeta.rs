//! Evaluation of `zeta(s)` and `eta(s)` by region dispatch, plus the
//! alternative representations used as independent cross-checks: the
//! fractional-part integral, the eta integral, the Euler product, the
//! reflected functional equation and the von Mangoldt series for the
//! logarithmic derivative.
//!
//! Dispatch for [`zeta`]:
//!
//! | region                 | route                                           |
//! |------------------------|-------------------------------------------------|
//! | `Re(s) > 1.5`          | direct series with Euler-Maclaurin tail         |
//! | `0 < Re(s) <= 1.5`     | accelerated eta divided by `1 - 2^(1-s)`        |
//! | `Re(s) <= 0`           | [`zeta_reflect`], except `|s| < 1e-3` (eta)     |

use std::f64::consts::{LN_2, PI};

use num_complex::Complex64;

use crate::arith::{primes_up_to, ArithTable};
use crate::error::{Result, ZetaError};
use crate::quad;
use crate::specfun::{
    expm1_c, gamma, ln_abs_gamma, ln_gamma_real, real_pow_neg, recip_gamma, ComplexValue,
    EvalResult, Method, EPS,
};

/// Tolerances shared by the evaluators.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EvalConfig {
    pub target_abs_err: f64,
    pub series_max_terms: usize,
    pub quadrature_tol: f64,
}

impl Default for EvalConfig {
    fn default() -> Self {
        Self {
            target_abs_err: 1e-12,
            series_max_terms: 10_000_000,
            quadrature_tol: 1e-10,
        }
    }
}

impl EvalConfig {
    pub fn new(target_abs_err: f64, series_max_terms: usize, quadrature_tol: f64) -> Result<Self> {
        if !(target_abs_err >= 10.0 * EPS) || series_max_terms == 0 || !(quadrature_tol > 0.0) {
            return Err(ZetaError::EvaluationFailure(format!(
                "invalid EvalConfig: target_abs_err={target_abs_err:e} must be >= 10 eps, \
                 series_max_terms={series_max_terms}, quadrature_tol={quadrature_tol:e}"
            )));
        }
        Ok(Self {
            target_abs_err,
            series_max_terms,
            quadrature_tol,
        })
    }
}

const POLE_RADIUS: f64 = 1e-12;
const ETA_FACTOR_REFUSE: f64 = 1e-9;
const ETA_FACTOR_AVERAGE: f64 = 1e-6;
const AVERAGE_RADIUS: f64 = 1e-6;
const NEAR_ORIGIN: f64 = 1e-3;
const CVZ_MAX_TERMS: usize = 400;

fn one() -> Complex64 {
    Complex64::new(1.0, 0.0)
}

// ---------------------------------------------------------------------------
// eta: Cohen-Villegas-Zagier acceleration
// ---------------------------------------------------------------------------

/// `sum_{k<n} (-1)^k (d_n - d_k)/d_n (k+1)^(-s)` with Borwein's `d_k`.
/// Returns the sum and the sum of term moduli.
fn cvz_sum(s: Complex64, n: usize) -> (Complex64, f64) {
    let mut d = Vec::with_capacity(n + 1);
    let mut term = 1.0f64;
    let mut acc = 1.0f64;
    d.push(acc);
    for i in 0..n {
        let fi = i as f64;
        let fnn = n as f64;
        term *= 4.0 * (fnn + fi) * (fnn - fi) / ((2.0 * fi + 1.0) * (2.0 * fi + 2.0));
        acc += term;
        d.push(acc);
    }
    let dn = d[n];
    let mut sum = Complex64::new(0.0, 0.0);
    let mut abs = 0.0;
    // smallest terms first
    for k in (0..n).rev() {
        let w = (dn - d[k]) / dn;
        let t = real_pow_neg((k + 1) as f64, s) * w;
        abs += t.norm();
        if k % 2 == 0 {
            sum += t;
        } else {
            sum -= t;
        }
    }
    (sum, abs)
}

/// Number of CVZ terms so that `2 Gamma(sigma) / ((3+sqrt 8)^n |Gamma(s)|)`
/// drops below `target / 4`, and the bound actually achieved.
fn cvz_terms(s: Complex64, target: f64) -> (usize, f64) {
    let rate = (3.0 + 8f64.sqrt()).ln();
    let log_scale = LN_2 + ln_gamma_real(s.re) - ln_abs_gamma(s);
    let need = (log_scale - (0.25 * target).ln()) / rate;
    let n = (need.ceil().max(8.0) as usize).min(CVZ_MAX_TERMS);
    let bound = (log_scale - rate * n as f64).exp();
    (n, bound)
}

/// `eta(s) = sum (-1)^(n+1) n^(-s)` for `Re(s) > 0`, CVZ-accelerated with the
/// committed truncation bound `2 Gamma(Re s) / ((3+sqrt 8)^n |Gamma(s)|)`.
pub fn eta(s: ComplexValue, cfg: &EvalConfig) -> Result<EvalResult> {
    if s.re <= 0.0 {
        return Err(ZetaError::DomainError {
            what: "eta",
            at: s,
            domain: "Re(s) > 0",
        });
    }
    let (n, trunc) = cvz_terms(s, cfg.target_abs_err);
    let (sum, abs) = cvz_sum(s, n);
    let err = trunc + 4.0 * EPS * (n as f64).sqrt() * abs * (1.0 + (s.im * (n as f64).ln()).abs());
    Ok(EvalResult::new(sum, err, Method::AcceleratedEta))
}

/// CVZ sum in a small disc around the origin, where the half-plane bound
/// does not apply; the error is estimated from two term counts.
fn eta_near_origin(s: Complex64) -> EvalResult {
    let (a, abs) = cvz_sum(s, 48);
    let (b, _) = cvz_sum(s, 40);
    let err = (a - b).norm() + 8.0 * EPS * abs;
    EvalResult::new(a, err, Method::AcceleratedEta)
}

/// `1 - 2^(1-s)`, accurate near `s = 1`.
pub(crate) fn eta_factor(s: Complex64) -> Complex64 {
    -expm1_c((one() - s) * LN_2)
}

/// The zero `s_k = 1 + 2 pi k i / ln 2` of the eta factor nearest to `s`.
pub fn nearest_eta_factor_zero(s: Complex64) -> (i64, Complex64) {
    let step = 2.0 * PI / LN_2;
    let k = (s.im / step).round();
    (k as i64, Complex64::new(1.0, k * step))
}

fn zeta_via_eta(s: Complex64, cfg: &EvalConfig) -> Result<EvalResult> {
    let e = eta(s, cfg)?;
    let den = eta_factor(s);
    let value = e.value / den;
    let den_err = EPS * (2.0 + (s - 1.0).norm() * LN_2) * 4.0;
    let err = (e.abs_err_est + value.norm() * den_err) / den.norm() + 2.0 * EPS * value.norm();
    Ok(EvalResult::new(value, err, Method::AcceleratedEta))
}

// ---------------------------------------------------------------------------
// zeta: Euler-Maclaurin
// ---------------------------------------------------------------------------

/// `B_2, B_4, ..., B_40`
const BERNOULLI_EVEN: [f64; 20] = [
    1.0 / 6.0,
    -1.0 / 30.0,
    1.0 / 42.0,
    -1.0 / 30.0,
    5.0 / 66.0,
    -691.0 / 2730.0,
    7.0 / 6.0,
    -3617.0 / 510.0,
    43867.0 / 798.0,
    -174611.0 / 330.0,
    854513.0 / 138.0,
    -236364091.0 / 2730.0,
    8553103.0 / 6.0,
    -23749461029.0 / 870.0,
    8615841276005.0 / 14322.0,
    -7709321041217.0 / 510.0,
    2577687858367.0 / 6.0,
    -26315271553053477373.0 / 1919190.0,
    2929993913841559.0 / 6.0,
    -261082718496449122051.0 / 13530.0,
];

/// Direct partial sum to `N - 1`, integral tail, and up to 19
/// Euler-Maclaurin corrections, with the standard remainder bound
/// `|R_K| <= |s + 2K + 1| / (Re s + 2K + 1) |T_(K+1)|`.
fn zeta_euler_maclaurin(s: Complex64, cfg: &EvalConfig) -> Result<EvalResult> {
    let mut big_n = 16 + (0.5 * s.norm()).ceil() as usize;
    loop {
        if let Some(r) = em_attempt(s, big_n, cfg.target_abs_err) {
            return Ok(r);
        }
        big_n *= 2;
        if big_n > cfg.series_max_terms {
            return Err(ZetaError::EvaluationFailure(format!(
                "Euler-Maclaurin at {s} needs more than {} terms",
                cfg.series_max_terms
            )));
        }
    }
}

fn em_attempt(s: Complex64, big_n: usize, target: f64) -> Option<EvalResult> {
    let mut head = Complex64::new(0.0, 0.0);
    let mut abs = 0.0;
    for n in (1..big_n).rev() {
        let t = real_pow_neg(n as f64, s);
        abs += t.norm();
        head += t;
    }
    let nf = big_n as f64;
    let n_pow = real_pow_neg(nf, s);
    let mut total = head + n_pow * nf / (s - 1.0) + n_pow * 0.5;
    abs += (n_pow * nf / (s - 1.0)).norm() + 0.5 * n_pow.norm();

    // T_k = B_2k / (2k)! * s (s+1) ... (s+2k-2) * N^(-s-2k+1)
    let mut poch = s; // s (s+1) ... (s+2k-2), k = 1
    let mut fact = 2.0; // (2k)!
    let mut npow = n_pow / nf; // N^(-s-2k+1)
    for (idx, &b) in BERNOULLI_EVEN.iter().enumerate() {
        let k = idx + 1;
        let term = poch * npow * (b / fact);
        let kf = k as f64;
        // bound the remainder after including term k by term k+1
        let next_poch = poch * (s + (2.0 * kf - 1.0)) * (s + 2.0 * kf);
        let next_fact = fact * (2.0 * kf + 1.0) * (2.0 * kf + 2.0);
        let next_npow = npow / (nf * nf);
        total += term;
        abs += term.norm();
        if idx + 1 < BERNOULLI_EVEN.len() {
            let next = next_poch * next_npow * (BERNOULLI_EVEN[idx + 1] / next_fact);
            let rem = next.norm() * (s + (2.0 * kf + 3.0)).norm() / (s.re + 2.0 * kf + 3.0);
            if rem < 0.25 * target {
                let err = rem + 4.0 * EPS * abs;
                return Some(EvalResult::new(total, err, Method::DirectSeries));
            }
        }
        poch = next_poch;
        fact = next_fact;
        npow = next_npow;
    }
    None
}

// ---------------------------------------------------------------------------
// zeta: dispatch
// ---------------------------------------------------------------------------

/// Riemann zeta with region dispatch; the method tag records the route.
pub fn zeta(s: ComplexValue, cfg: &EvalConfig) -> Result<EvalResult> {
    if (s - 1.0).norm() < POLE_RADIUS {
        return Err(ZetaError::PoleAtOne(s));
    }
    if s.re > 1.5 {
        return zeta_euler_maclaurin(s, cfg);
    }
    if s.re <= 0.0 {
        if s.norm() < NEAR_ORIGIN {
            let e = eta_near_origin(s);
            let den = eta_factor(s);
            let value = e.value / den;
            let err = e.abs_err_est / den.norm() + 8.0 * EPS * value.norm();
            return Ok(EvalResult::new(value, err, Method::AcceleratedEta));
        }
        return zeta_reflect(s, cfg);
    }
    let (k, sk) = nearest_eta_factor_zero(s);
    if k != 0 {
        let dist = (s - sk).norm();
        if dist < ETA_FACTOR_REFUSE {
            return Err(ZetaError::EtaFactorZero(s));
        }
        if dist < ETA_FACTOR_AVERAGE {
            return zeta_circle_mean(s, sk, cfg);
        }
    }
    zeta_via_eta(s, cfg)
}

/// Mean of the eta quotient over four points at radius `1e-6` around `s`,
/// rotated so that none of them approaches the factor zero `sk`.
fn zeta_circle_mean(s: Complex64, sk: Complex64, cfg: &EvalConfig) -> Result<EvalResult> {
    let phi = (sk - s).arg() + 0.25 * PI;
    let mut sum = Complex64::new(0.0, 0.0);
    let mut err: f64 = 0.0;
    for j in 0..4 {
        let p = s + Complex64::from_polar(AVERAGE_RADIUS, phi + 0.5 * PI * j as f64);
        let r = zeta_via_eta(p, cfg)?;
        sum += r.value;
        err = err.max(r.abs_err_est);
    }
    Ok(EvalResult::new(sum * 0.25, err, Method::AcceleratedEta))
}

/// The functional equation solved for `zeta(s)`:
/// `pi^(s - 1/2) Gamma((1-s)/2) / Gamma(s/2) * zeta(1 - s)`.
pub fn zeta_reflect(s: ComplexValue, cfg: &EvalConfig) -> Result<EvalResult> {
    if (s - 1.0).norm() < POLE_RADIUS {
        return Err(ZetaError::PoleAtOne(s));
    }
    let w = one() - s;
    let g = gamma(w * 0.5)?;
    let (rg, rg_rel) = recip_gamma(s * 0.5);
    let p = ((s - 0.5) * PI.ln()).exp();
    let z = zeta(w, cfg)?;
    let factor = p * g.value * rg;
    let value = factor * z.value;
    let g_rel = g.abs_err_est / g.value.norm();
    let err = factor.norm() * z.abs_err_est
        + value.norm() * (g_rel + rg_rel + EPS * (4.0 + s.norm() * PI.ln()));
    Ok(EvalResult::new(value, err, Method::FunctionalEquation))
}

// ---------------------------------------------------------------------------
// integral representations
// ---------------------------------------------------------------------------

const ETA_INTEGRAL_TAYLOR_TERMS: usize = 64;
const MAX_PANELS: usize = 4_000;

/// Taylor coefficients of `1 / (e^x + 1)` at 0.
fn fermi_taylor() -> [f64; ETA_INTEGRAL_TAYLOR_TERMS] {
    let mut a = [0.0; ETA_INTEGRAL_TAYLOR_TERMS];
    let mut inv_fact = [0.0; ETA_INTEGRAL_TAYLOR_TERMS];
    inv_fact[0] = 1.0;
    for j in 1..ETA_INTEGRAL_TAYLOR_TERMS {
        inv_fact[j] = inv_fact[j - 1] / j as f64;
    }
    a[0] = 0.5;
    for k in 1..ETA_INTEGRAL_TAYLOR_TERMS {
        let s: f64 = (1..=k).map(|j| a[k - j] * inv_fact[j]).sum();
        a[k] = -0.5 * s;
    }
    a
}

/// `int_0^inf x^(s-1) / (e^x + 1) dx` for `0 < Re(s) < 3`.
///
/// `[0, 1]` is integrated termwise against the Taylor series of the
/// Fermi factor; `[1, X]` by adaptive Gauss-Kronrod; `[X, inf)` is dropped
/// once `X^(Re s - 1) e^(-X)` certifies it below a tenth of the tolerance.
pub fn eta_integral_raw(s: ComplexValue, tol: f64) -> Result<EvalResult> {
    if !(s.re > 0.0 && s.re < 3.0) {
        return Err(ZetaError::DomainError {
            what: "eta_integral",
            at: s,
            domain: "0 < Re(s) < 3",
        });
    }
    let a = fermi_taylor();
    let mut near = Complex64::new(0.0, 0.0);
    for k in (0..ETA_INTEGRAL_TAYLOR_TERMS).rev() {
        near += Complex64::new(a[k], 0.0) / (s + k as f64);
    }
    let series_err = 2.0 * PI.powi(-(ETA_INTEGRAL_TAYLOR_TERMS as i32)) + 8.0 * EPS;

    let sig = s.re;
    let tail_bound = |x: f64| {
        let shape = if sig > 1.0 { 1.0 / (1.0 - (sig - 1.0) / x) } else { 1.0 };
        x.powf(sig - 1.0) * (-x).exp() * shape
    };
    let mut upper = 8.0f64;
    while tail_bound(upper) > 0.1 * tol && upper < 700.0 {
        upper += 1.0;
    }
    let sm1 = s - 1.0;
    let integrand = |x: f64| (sm1 * x.ln()).exp() / (x.exp() + 1.0);
    let (far, qerr) = quad::integrate(integrand, 1.0, upper, 0.8 * tol, MAX_PANELS)?;
    let value = near + far;
    let err = qerr + tail_bound(upper) + series_err + 4.0 * EPS * value.norm();
    Ok(EvalResult::new(value, err, Method::Quadrature))
}

/// `eta(s) = (1 / Gamma(s)) int_0^inf x^(s-1) / (e^x + 1) dx`.
pub fn eta_integral(s: ComplexValue, cfg: &EvalConfig) -> Result<EvalResult> {
    let g = gamma(s)?;
    let scale = g.value.norm().min(1.0);
    // Below ~1e-14 absolute the quadrature is at rounding level; for large
    // |Im s| the division by a tiny Gamma then shows up in the error estimate.
    let raw = eta_integral_raw(s, (cfg.quadrature_tol * scale).max(1e-14))?;
    let value = raw.value / g.value;
    let err = raw.abs_err_est / g.value.norm() + value.norm() * (g.abs_err_est / g.value.norm());
    Ok(EvalResult::new(value, err, Method::Quadrature))
}

/// Upper bound on `|int_0^inf x^(s-1)/(e^x+1) dx|` for `Re(s) = alpha` in
/// `(0, 1)`: `1/(alpha(e+1)) + (1/alpha)(1/2 - 1/(e+1)) + 1/e`.
pub fn eta_integral_bound(alpha: f64) -> f64 {
    let e1 = std::f64::consts::E + 1.0;
    1.0 / (alpha * e1) + (0.5 - 1.0 / e1) / alpha + (-1.0f64).exp()
}

/// `int_1^inf {x} x^(-s-1) dx`, piecewise over `[n, n+1]` with a periodic
/// Bernoulli tail correction beyond `N`.
pub fn fractional_part_integral(s: ComplexValue, tol: f64) -> Result<EvalResult> {
    if s.re <= 1.0 {
        return Err(ZetaError::DomainError {
            what: "fractional_part_integral",
            at: s,
            domain: "Re(s) > 1",
        });
    }
    let sig = s.re;
    let s1 = s + 1.0;
    let s2 = s + 2.0;
    let s3 = s + 3.0;
    let poly = s1.norm() * s2.norm() * s3.norm() / (720.0 * (sig + 3.0));
    // remainder after the three tail terms: poly * N^(-sig-3)
    let mut big_n = ((poly / (0.1 * tol)).powf(1.0 / (sig + 3.0))).ceil().max(16.0) as usize;
    big_n = big_n.min(10_000_000);
    let tail_err = poly * (big_n as f64).powf(-sig - 3.0);

    let seg_tol = 0.5 * tol / big_n as f64;
    let neg = -s - 1.0;
    let mut sum = Complex64::new(0.0, 0.0);
    let mut qerr = 0.0;
    for n in 1..big_n {
        let nf = n as f64;
        let f = |x: f64| (neg * x.ln()).exp() * (x - nf);
        let (v, e) = quad::integrate(f, nf, nf + 1.0, seg_tol, 256)?;
        sum += v;
        qerr += e;
    }
    let nf = big_n as f64;
    let np = real_pow_neg(nf, s);
    let tail = np / (s * 2.0) - np / (12.0 * nf) + s1 * s2 * np / (720.0 * nf * nf * nf);
    let value = sum + tail;
    let err = qerr + tail_err + 4.0 * EPS * big_n as f64 * value.norm().max(1e-300);
    Ok(EvalResult::new(value, err, Method::Quadrature))
}

/// `zeta(s) = s/(s-1) - s int_1^inf {x} x^(-s-1) dx` for `Re(s) > 1`.
pub fn zeta_floor_integral(s: ComplexValue, cfg: &EvalConfig) -> Result<EvalResult> {
    if s.re <= 1.0 {
        return Err(ZetaError::DomainError {
            what: "zeta_floor_integral",
            at: s,
            domain: "Re(s) > 1",
        });
    }
    let tol = cfg.quadrature_tol / s.norm().max(1.0);
    let i = fractional_part_integral(s, tol)?;
    let pole = s / (s - 1.0);
    let value = pole - s * i.value;
    let err = s.norm() * i.abs_err_est + 4.0 * EPS * (pole.norm() + value.norm());
    Ok(EvalResult::new(value, err, Method::Quadrature))
}

// ---------------------------------------------------------------------------
// Euler product and the logarithmic derivative
// ---------------------------------------------------------------------------

/// `prod_{p <= prime_bound} 1 / (1 - p^(-s))` for `Re(s) > 1`.
pub fn euler_product(s: ComplexValue, prime_bound: usize) -> Result<EvalResult> {
    if prime_bound < 2 {
        return Err(ZetaError::InvalidBound(prime_bound));
    }
    euler_product_over(s, &primes_up_to(prime_bound), prime_bound)
}

/// [`euler_product`] over a precomputed ascending prime list that contains
/// every prime up to `prime_bound`.
pub fn euler_product_over(s: ComplexValue, primes: &[u64], prime_bound: usize) -> Result<EvalResult> {
    if s.re <= 1.0 {
        return Err(ZetaError::DomainError {
            what: "euler_product",
            at: s,
            domain: "Re(s) > 1",
        });
    }
    let mut prod = one();
    for &p in primes.iter().take_while(|&&p| p as usize <= prime_bound) {
        prod /= one() - real_pow_neg(p as f64, s);
    }
    let a = s.re;
    let pb = prime_bound as f64;
    let log_tail = pb.powf(1.0 - a) / ((a - 1.0) * (1.0 - pb.powf(-a)));
    let err = prod.norm() * (log_tail.exp_m1() + 4.0 * EPS * primes.len() as f64);
    Ok(EvalResult::new(prod, err, Method::EulerProduct))
}

/// `exp(-sum_p p^(-alpha))` over the given primes: the lower bound on
/// `|zeta(alpha + i beta)|` that follows from `|1 - p^(-s)| <= exp(p^(-alpha))`.
pub fn euler_lower_bound(alpha: f64, primes: &[u64]) -> f64 {
    let s: f64 = primes.iter().map(|&p| (p as f64).powf(-alpha)).sum();
    (-s).exp()
}

/// `-sum_{2 <= n <= N} Lambda(n) n^(-s)`, truncated von Mangoldt series for
/// `zeta'(s) / zeta(s)`, `Re(s) > 1`.
pub fn log_deriv_zeta(s: ComplexValue, n: usize) -> Result<EvalResult> {
    if s.re <= 1.0 {
        return Err(ZetaError::DomainError {
            what: "log_deriv_zeta",
            at: s,
            domain: "Re(s) > 1",
        });
    }
    if n < 2 {
        return Ok(EvalResult::new(
            Complex64::new(0.0, 0.0),
            mangoldt_tail(s.re, 1),
            Method::DirectSeries,
        ));
    }
    let table = crate::arith::build_table(n)?;
    log_deriv_zeta_with(s, &table)
}

/// [`log_deriv_zeta`] reusing a sieved table; `N` is the table bound.
pub fn log_deriv_zeta_with(s: ComplexValue, table: &ArithTable) -> Result<EvalResult> {
    if s.re <= 1.0 {
        return Err(ZetaError::DomainError {
            what: "log_deriv_zeta",
            at: s,
            domain: "Re(s) > 1",
        });
    }
    let mut sum = Complex64::new(0.0, 0.0);
    let mut abs = 0.0;
    for (k, &lam) in table.mangoldt().iter().enumerate().skip(2) {
        if lam == 0.0 {
            continue;
        }
        let t = real_pow_neg(k as f64, s) * lam;
        abs += t.norm();
        sum += t;
    }
    let err = mangoldt_tail(s.re, table.bound()) + 4.0 * EPS * abs;
    Ok(EvalResult::new(-sum, err, Method::DirectSeries))
}

/// `sum_{n > N} ln(n) n^(-sigma) <= N^(1-sigma) (ln N / (sigma-1) + 1/(sigma-1)^2)`
fn mangoldt_tail(sigma: f64, n: usize) -> f64 {
    let nf = (n.max(3)) as f64;
    let d = sigma - 1.0;
    nf.powf(-d) * (nf.ln() / d + 1.0 / (d * d))
}

/// `zeta'(s) / zeta(s)` by a five-point central difference of [`zeta`] with
/// step `h`.
pub fn log_deriv_numeric(s: ComplexValue, h: f64, cfg: &EvalConfig) -> Result<ComplexValue> {
    let z = zeta(s, cfg)?.value;
    Ok(crate::zeros::derivative_5pt(|p| zeta(p, cfg).map(|r| r.value), s, h)? / z)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn cfg() -> EvalConfig {
        EvalConfig::default()
    }

    #[test]
    fn config_validation() {
        assert!(EvalConfig::new(1e-16, 10, 1e-10).is_err());
        assert!(EvalConfig::new(1e-12, 10, 1e-10).is_ok());
    }

    #[test]
    fn fermi_taylor_coefficients() {
        let a = fermi_taylor();
        assert_eq!(a[0], 0.5);
        assert_eq!(a[1], -0.25);
        assert!(a[2].abs() < 1e-18);
        assert!((a[3] - 1.0 / 48.0).abs() < 1e-17);
        assert!((a[5] + 1.0 / 480.0).abs() < 1e-17);
    }

    #[test]
    fn dispatch_tags() {
        assert_eq!(zeta(c(2.0, 0.0), &cfg()).unwrap().method, Method::DirectSeries);
        assert_eq!(zeta(c(0.5, 3.0), &cfg()).unwrap().method, Method::AcceleratedEta);
        assert_eq!(zeta(c(-1.0, 0.0), &cfg()).unwrap().method, Method::FunctionalEquation);
        assert_eq!(zeta(c(0.0, 0.0), &cfg()).unwrap().method, Method::AcceleratedEta);
    }

    #[test]
    fn pole_and_factor_zero_errors() {
        assert!(matches!(zeta(c(1.0, 0.0), &cfg()), Err(ZetaError::PoleAtOne(_))));
        let (_, s1) = nearest_eta_factor_zero(c(1.0, 9.0));
        assert!(matches!(zeta(s1, &cfg()), Err(ZetaError::EtaFactorZero(_))));
        assert!(matches!(eta(c(0.0, 2.0), &cfg()), Err(ZetaError::DomainError { .. })));
    }

    #[test]
    fn near_factor_zero_is_continuous() {
        let (_, s1) = nearest_eta_factor_zero(c(1.0, 9.0));
        let close = zeta(s1 + c(3e-7, 1e-7), &cfg()).unwrap();
        let away = zeta(s1 + c(1e-4, 0.0), &cfg()).unwrap();
        // zeta is smooth there: |zeta'| is O(1)
        assert!((close.value - away.value).norm() < 1e-3);
        let em = zeta_euler_maclaurin(s1 + c(3e-7, 1e-7), &cfg()).unwrap();
        assert!((close.value - em.value).norm() < 1e-8, "{}", (close.value - em.value).norm());
    }

    #[test]
    fn euler_maclaurin_agrees_with_eta_route() {
        for &s in &[c(1.2, 5.0), c(0.7, 20.0), c(1.5, -33.0), c(0.2, 0.3)] {
            let a = zeta_euler_maclaurin(s, &cfg()).unwrap();
            let b = zeta_via_eta(s, &cfg()).unwrap();
            assert!((a.value - b.value).norm() < 1e-11, "{s}: {}", (a.value - b.value).norm());
        }
    }

    #[test]
    fn eta_special_values() {
        let e1 = eta(c(1.0, 0.0), &cfg()).unwrap();
        assert!((e1.value.re - LN_2).abs() < 1e-14);
        let e2 = eta(c(2.0, 0.0), &cfg()).unwrap();
        assert!((e2.value.re - PI * PI / 12.0).abs() < 1e-14);
        let s = c(0.7, 9.0);
        assert_eq!(eta(s.conj(), &cfg()).unwrap().value, eta(s, &cfg()).unwrap().value.conj());
    }

    #[test]
    fn eta_integral_matches_series() {
        let i2 = eta_integral(c(2.0, 0.0), &cfg()).unwrap();
        assert!((i2.value.re - PI * PI / 12.0).abs() < 1e-8);
        let ih = eta_integral(c(0.5, 0.0), &cfg()).unwrap();
        let sh = eta(c(0.5, 0.0), &cfg()).unwrap();
        assert!((ih.value - sh.value).norm() < 1e-8);
        let s = c(0.6, 4.0);
        let a = eta_integral(s, &cfg()).unwrap();
        let b = eta(s, &cfg()).unwrap();
        assert!((a.value - b.value).norm() < 1e-8);
        assert!(eta_integral(c(3.0, 0.0), &cfg()).is_err());
    }

    #[test]
    fn eta_integral_respects_strip_bound() {
        let raw = eta_integral_raw(c(0.5, 0.0), 1e-10).unwrap();
        assert!(raw.value.norm() < eta_integral_bound(0.5));
        let raw = eta_integral_raw(c(0.5, 7.0), 1e-10).unwrap();
        assert!(raw.value.norm() < eta_integral_bound(0.5));
    }

    #[test]
    fn floor_integral_examples() {
        let z = zeta_floor_integral(c(2.0, 0.0), &cfg()).unwrap();
        assert!((z.value.re - PI * PI / 6.0).abs() < 1e-8);
        let s = c(1.0 + 1e-6, 0.0);
        let z = zeta_floor_integral(s, &cfg()).unwrap();
        assert!(((s - 1.0) * z.value - 1.0).norm() < 1e-4);
        let i = fractional_part_integral(c(1.5, 3.0), 1e-10).unwrap();
        assert!(i.value.norm() < 2.0 / 3.0);
        assert!(zeta_floor_integral(c(1.0, 2.0), &cfg()).is_err());
    }

    #[test]
    fn euler_product_examples() {
        let e = euler_product(c(3.0, 0.0), 2).unwrap();
        assert!((e.value.re - 8.0 / 7.0).abs() < 1e-15);
        let e = euler_product(c(2.0, 0.0), 100_000).unwrap();
        assert!((e.value.re - PI * PI / 6.0).abs() < 1e-5);
        assert!((e.value.re - PI * PI / 6.0).abs() <= e.abs_err_est);
        assert!(euler_product(c(1.0, 0.0), 100).is_err());
        assert!(euler_product(c(2.0, 0.0), 1).is_err());
    }

    #[test]
    fn euler_product_increases_on_the_real_axis() {
        let mut prev = 0.0;
        for &b in &[2usize, 10, 100, 1000, 10_000] {
            let v = euler_product(c(2.5, 0.0), b).unwrap().value.re;
            assert!(v > prev);
            prev = v;
        }
        let z = zeta(c(2.5, 0.0), &cfg()).unwrap().value.re;
        assert!(prev < z);
    }

    #[test]
    fn log_derivative_routes_agree() {
        let series = log_deriv_zeta(c(3.0, 0.0), 100_000).unwrap();
        let fd = log_deriv_numeric(c(3.0, 0.0), 1e-5, &cfg()).unwrap();
        assert!((series.value - fd).norm() < 1e-6);
        assert_eq!(log_deriv_zeta(c(2.0, 1.0), 1).unwrap().value, c(0.0, 0.0));
        assert!(log_deriv_zeta(c(1.0, 1.0), 10).is_err());
    }

    #[test]
    fn pole_residue_from_log_derivative() {
        let eps = 1e-4;
        let w = log_deriv_numeric(c(1.0 + eps, 0.0), eps / 10.0, &cfg()).unwrap() * eps;
        assert!((w.re + 1.0).abs() < 1e-3);
    }
}
