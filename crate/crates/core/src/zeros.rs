//! Zero location: argument-principle census over rectangles, critical-line
//! zero finding from minima of `|eta(1/2 + it)|`, the multiplicity
//! functional `Re[eps f'(a+eps) / f(a+eps)]`, and the zero-free line checks.

use std::f64::consts::PI;
use std::time::Instant;

use num_complex::Complex64;
use rayon::prelude::*;
use serde::Serialize;

use crate::check::CheckResult;
use crate::error::{Result, ZetaError};
use crate::specfun::ComplexValue;
use crate::zeta::{eta, zeta, EvalConfig};

const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;
/// Boundary clearance required around known zeros and the pole.
pub const BOUNDARY_CLEARANCE: f64 = 1e-6;
/// `|(s-1) zeta(s)|` below this at a contour sample means the contour runs
/// through (or next to) a zero.
const CONTOUR_FLOOR: f64 = 1e-10;
const MAX_BISECTIONS: u32 = 24;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Rect {
    pub re_min: f64,
    pub re_max: f64,
    pub im_min: f64,
    pub im_max: f64,
}

impl Rect {
    pub fn new(re_min: f64, re_max: f64, im_min: f64, im_max: f64) -> Result<Self> {
        let r = Self { re_min, re_max, im_min, im_max };
        if !(re_min < re_max && im_min < im_max) {
            return Err(ZetaError::InvalidRect(format!(
                "need re_min < re_max and im_min < im_max, got {r:?}"
            )));
        }
        Ok(r)
    }

    /// A degenerate rectangle holding a single point; accepted by scans only.
    pub fn point(s: ComplexValue) -> Self {
        Self { re_min: s.re, re_max: s.re, im_min: s.im, im_max: s.im }
    }

    pub fn contains_strictly(&self, s: ComplexValue) -> bool {
        s.re > self.re_min && s.re < self.re_max && s.im > self.im_min && s.im < self.im_max
    }

    /// Corners in counter-clockwise order starting at the lower left.
    fn corners(&self) -> [Complex64; 4] {
        [
            Complex64::new(self.re_min, self.im_min),
            Complex64::new(self.re_max, self.im_min),
            Complex64::new(self.re_max, self.im_max),
            Complex64::new(self.re_min, self.im_max),
        ]
    }

    /// Distance from `s` to the boundary.
    pub fn boundary_distance(&self, s: ComplexValue) -> f64 {
        let c = self.corners();
        (0..4).map(|i| segment_distance(s, c[i], c[(i + 1) % 4])).fold(f64::INFINITY, f64::min)
    }
}

fn segment_distance(p: Complex64, a: Complex64, b: Complex64) -> f64 {
    let d = b - a;
    let t = (((p - a) * d.conj()).re / d.norm_sqr()).clamp(0.0, 1.0);
    (p - (a + d * t)).norm()
}

/// `(s - 1) zeta(s)`, entire apart from nothing: the pole is removed.
fn regularized_zeta(s: Complex64, cfg: &EvalConfig) -> Result<Complex64> {
    let d = s - 1.0;
    if d.norm() < BOUNDARY_CLEARANCE {
        return Ok(Complex64::new(1.0, 0.0) + d * EULER_GAMMA);
    }
    Ok(d * zeta(s, cfg)?.value)
}

/// Winding of `(s - 1) zeta(s)` along one edge, with increments taken in
/// `(-pi, pi]` and bisection wherever an increment exceeds `pi/2`.
fn edge_winding(a: Complex64, b: Complex64, samples: usize, cfg: &EvalConfig) -> Result<f64> {
    let pts: Vec<Complex64> = (0..=samples).map(|j| a + (b - a) * (j as f64 / samples as f64)).collect();
    let vals: Vec<Complex64> = pts
        .par_iter()
        .map(|&p| checked_sample(p, cfg))
        .collect::<Result<_>>()?;
    let mut total = 0.0;
    for j in 0..samples {
        total += arc(pts[j], vals[j], pts[j + 1], vals[j + 1], cfg, 0)?;
    }
    Ok(total)
}

fn checked_sample(p: Complex64, cfg: &EvalConfig) -> Result<Complex64> {
    let v = regularized_zeta(p, cfg).map_err(|e| match e {
        ZetaError::EtaFactorZero(_) | ZetaError::EvaluationFailure(_) => ZetaError::BoundaryTooCloseToZero(p),
        other => other,
    })?;
    if v.norm() < CONTOUR_FLOOR {
        return Err(ZetaError::BoundaryTooCloseToZero(p));
    }
    Ok(v)
}

fn arc(pa: Complex64, fa: Complex64, pb: Complex64, fb: Complex64, cfg: &EvalConfig, depth: u32) -> Result<f64> {
    let inc = (fb / fa).arg();
    if inc.abs() <= 0.5 * PI {
        return Ok(inc);
    }
    let pm = (pa + pb) * 0.5;
    if depth >= MAX_BISECTIONS {
        return Err(ZetaError::BoundaryTooCloseToZero(pm));
    }
    let fm = checked_sample(pm, cfg)?;
    Ok(arc(pa, fa, pm, fm, cfg, depth + 1)? + arc(pm, fm, pb, fb, cfg, depth + 1)?)
}

/// Zeros minus poles of `zeta` inside `r`.
///
/// The winding of the pole-free `(s - 1) zeta(s)` is counted, and the pole is
/// subtracted when `s = 1` lies strictly inside. A rectangle with the pole on
/// its boundary (a corner of `[0,1] x [0,T]`, say) is therefore accepted and
/// the pole is not counted.
pub fn count_zeros_rect(r: &Rect, samples_per_edge: usize, cfg: &EvalConfig) -> Result<i64> {
    let r = Rect::new(r.re_min, r.re_max, r.im_min, r.im_max)?;
    if samples_per_edge < 64 {
        return Err(ZetaError::EvaluationFailure(format!(
            "samples_per_edge must be at least 64, got {samples_per_edge}"
        )));
    }
    let lowest = (r.re_min.min(0.0) / 2.0).floor() as i64;
    for k in lowest..0 {
        let z = Complex64::new(2.0 * k as f64, 0.0);
        if r.boundary_distance(z) < BOUNDARY_CLEARANCE {
            return Err(ZetaError::BoundaryTooCloseToZero(z));
        }
    }
    let c = r.corners();
    let windings: Vec<f64> = (0..4)
        .into_par_iter()
        .map(|i| {
            let (a, b) = (c[i], c[(i + 1) % 4]);
            let n = samples_per_edge.max(((b - a).norm() * 8.0).ceil() as usize);
            edge_winding(a, b, n, cfg)
        })
        .collect::<Result<_>>()?;
    let w = windings.iter().sum::<f64>() / (2.0 * PI);
    let k = w.round();
    if (w - k).abs() > 0.1 {
        return Err(ZetaError::NonIntegerWinding(w));
    }
    let pole_inside = r.contains_strictly(Complex64::new(1.0, 0.0)) as i64;
    Ok(k as i64 - pole_inside)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ZeroMethod {
    MinimumRefinement,
    WindingConfirmed,
}

impl ZeroMethod {
    pub fn as_str(self) -> &'static str {
        match self {
            ZeroMethod::MinimumRefinement => "minimum-refinement",
            ZeroMethod::WindingConfirmed => "winding-confirmed",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ZeroRecord {
    pub location: ComplexValue,
    /// `|eta|` at the refined location.
    pub refined_abs_value: f64,
    pub multiplicity_estimate: f64,
    pub method: ZeroMethod,
}

const GOLDEN: f64 = 0.618_033_988_749_894_9;
const ACCEPT_ABS_ETA: f64 = 1e-8;

fn abs_eta_on_line(t: f64, cfg: &EvalConfig) -> f64 {
    eta(Complex64::new(0.5, t), cfg).map(|r| r.value.norm()).unwrap_or(f64::INFINITY)
}

fn golden_section(mut a: f64, mut b: f64, cfg: &EvalConfig) -> (f64, f64) {
    let mut x1 = b - GOLDEN * (b - a);
    let mut x2 = a + GOLDEN * (b - a);
    let mut f1 = abs_eta_on_line(x1, cfg);
    let mut f2 = abs_eta_on_line(x2, cfg);
    while b - a > 1e-10 {
        if f1 < f2 {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - GOLDEN * (b - a);
            f1 = abs_eta_on_line(x1, cfg);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + GOLDEN * (b - a);
            f2 = abs_eta_on_line(x2, cfg);
        }
    }
    let t = 0.5 * (a + b);
    (t, abs_eta_on_line(t, cfg))
}

/// Zeros on `Re(s) = 1/2` with `t_min <= t <= t_max`, sorted by `t`.
///
/// Local minima of `|eta(1/2 + it)|` on the grid are refined by golden
/// section, confirmed by a winding count on a `0.2 x 0.2` square, and kept
/// as minimum-refinement records when the count is unavailable but
/// `|eta| < 1e-8`.
pub fn find_critical_zeros(t_min: f64, t_max: f64, step: f64, cfg: &EvalConfig) -> Result<Vec<ZeroRecord>> {
    if !(t_min > 0.0 && t_min < t_max && step > 0.0 && step <= 0.05) {
        return Err(ZetaError::EvaluationFailure(format!(
            "find_critical_zeros needs 0 < t_min < t_max and 0 < step <= 0.05 \
             (got {t_min}, {t_max}, {step})"
        )));
    }
    let n = ((t_max - t_min) / step).ceil() as usize;
    let ts: Vec<f64> = (0..=n).map(|j| (t_min + j as f64 * step).min(t_max)).collect();
    let vals: Vec<f64> = ts.par_iter().map(|&t| abs_eta_on_line(t, cfg)).collect();
    let brackets: Vec<(f64, f64)> = (1..ts.len().saturating_sub(1))
        .filter(|&j| vals[j] < vals[j - 1] && vals[j] <= vals[j + 1])
        .map(|j| (ts[j - 1], ts[j + 1]))
        .collect();
    let mut records: Vec<ZeroRecord> = brackets
        .par_iter()
        .filter_map(|&(a, b)| refine_candidate(a, b, cfg))
        .collect();
    records.sort_by(|x, y| x.location.im.total_cmp(&y.location.im));
    records.dedup_by(|x, y| (x.location.im - y.location.im).abs() < 1e-6);
    Ok(records)
}

fn refine_candidate(a: f64, b: f64, cfg: &EvalConfig) -> Option<ZeroRecord> {
    let (t, v) = golden_section(a, b, cfg);
    let rho = Complex64::new(0.5, t);
    let square = Rect::new(0.4, 0.6, t - 0.1, t + 0.1).ok()?;
    let method = match count_zeros_rect(&square, 64, cfg) {
        Ok(k) if k >= 1 => ZeroMethod::WindingConfirmed,
        _ if v < ACCEPT_ABS_ETA => ZeroMethod::MinimumRefinement,
        _ => return None,
    };
    let m = multiplicity(|p| zeta(p, cfg).map(|r| r.value), rho, 1e-4)
        .map(|m| m.value)
        .unwrap_or(f64::NAN);
    Some(ZeroRecord {
        location: rho,
        refined_abs_value: v,
        multiplicity_estimate: m,
        method,
    })
}

/// Write records as CSV with columns `t,re,im,abs_eta,multiplicity,method`.
pub fn write_zeros_csv<W: std::io::Write>(records: &[ZeroRecord], out: W) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    let io = |e: csv::Error| ZetaError::Io(e.to_string());
    w.write_record(["t", "re", "im", "abs_eta", "multiplicity", "method"]).map_err(io)?;
    for r in records {
        w.write_record([
            format!("{}", r.location.im),
            format!("{}", r.location.re),
            format!("{}", r.location.im),
            format!("{:e}", r.refined_abs_value),
            format!("{}", r.multiplicity_estimate),
            r.method.as_str().to_string(),
        ])
        .map_err(io)?;
    }
    w.flush()?;
    Ok(())
}

/// `f'(z)` by the five-point central stencil with step `h`.
pub(crate) fn derivative_5pt<F>(f: F, z: Complex64, h: f64) -> Result<Complex64>
where
    F: Fn(Complex64) -> Result<Complex64>,
{
    let fp1 = f(z + h)?;
    let fm1 = f(z - h)?;
    let fp2 = f(z + 2.0 * h)?;
    let fm2 = f(z - 2.0 * h)?;
    Ok((fm2 - fp2 + (fp1 - fm1) * 8.0) / (12.0 * h))
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct MultiplicityEstimate {
    pub value: f64,
    /// The two offsets disagreed by more than 0.05.
    pub low_confidence: bool,
}

/// `Re[eps f'(a + eps) / f(a + eps)]` at `eps` and `eps/2`, combined by
/// Richardson extrapolation `2 w(eps/2) - w(eps)`.
///
/// The order of a zero is positive, of a pole negative, 0 at a regular point.
pub fn multiplicity<F>(f: F, a: ComplexValue, eps: f64) -> Result<MultiplicityEstimate>
where
    F: Fn(Complex64) -> Result<Complex64>,
{
    if !(1e-6..=1e-3).contains(&eps) {
        return Err(ZetaError::EvaluationFailure(format!(
            "multiplicity offset {eps:e} outside [1e-6, 1e-3]"
        )));
    }
    let level = |e: f64| -> Result<f64> {
        let p = a + e;
        let fv = f(p)?;
        let d = derivative_5pt(&f, p, e / 10.0)?;
        let w = (d / fv * e).re;
        if w.is_finite() {
            Ok(w)
        } else {
            Err(ZetaError::EvaluationFailure(format!("non-finite logarithmic derivative at {p}")))
        }
    };
    let wrap = |e: ZetaError| match e {
        ZetaError::EvaluationFailure(_) => e,
        other => ZetaError::EvaluationFailure(other.to_string()),
    };
    let w1 = level(eps).map_err(wrap)?;
    let w2 = level(0.5 * eps).map_err(wrap)?;
    Ok(MultiplicityEstimate {
        value: 2.0 * w2 - w1,
        low_confidence: (w1 - w2).abs() > 0.05,
    })
}

/// Grid spacing used by [`check_line_zeros`].
pub const LINE_STEP: f64 = 0.01;
/// Lower bound asserted for `|zeta|` on the lines.
pub const LINE_FLOOR: f64 = 1e-3;

/// Check that `|zeta(line_re + it)|` stays above `1e-3` for `0 <= t <= t_max`,
/// skipping `t < 1e-3` (the neighbourhood of `s = 0` or `s = 1`). On
/// `Re(s) = 0` the value `zeta(0) = -1/2` is also checked to `1e-10`.
///
/// The residual is the worst signed violation (`1e-3 - min |zeta|`, or
/// `|zeta(0) + 1/2| - 1e-10`) and the tolerance is 0.
pub fn check_line_zeros(line_re: f64, t_max: f64, cfg: &EvalConfig) -> CheckResult {
    let start = Instant::now();
    let id = if line_re == 0.0 { "LINE_RE_0" } else { "LINE_RE_1" };
    if !(line_re == 0.0 || line_re == 1.0) || !(t_max > 0.0 && t_max <= 50.0) {
        return CheckResult::judged(
            id,
            f64::INFINITY,
            0.0,
            0,
            format!("invalid arguments line_re={line_re}, t_max={t_max}"),
        );
    }
    let n = (t_max / LINE_STEP).round() as usize;
    let samples: Vec<(f64, f64)> = (0..=n)
        .into_par_iter()
        .map(|j| j as f64 * LINE_STEP)
        .filter(|&t| t >= 1e-3)
        .map(|t| {
            let v = zeta(Complex64::new(line_re, t), cfg).map(|r| r.value.norm()).unwrap_or(f64::NAN);
            (t, v)
        })
        .collect();
    let mut min_abs = f64::INFINITY;
    let mut at = f64::NAN;
    let mut failures = 0usize;
    for &(t, v) in &samples {
        if v.is_nan() {
            failures += 1;
        } else if v < min_abs {
            min_abs = v;
            at = t;
        }
    }
    let mut residual = if failures > 0 { f64::INFINITY } else { LINE_FLOOR - min_abs };
    let mut details = format!("min |zeta({line_re}+it)| = {min_abs:.6e} at t = {at:.2}");
    if failures > 0 {
        details.push_str(&format!("; {failures} evaluation failures"));
    }
    let mut n_samples = samples.len() as u64;
    if line_re == 0.0 {
        n_samples += 1;
        let z0 = zeta(Complex64::new(0.0, 0.0), cfg).map(|r| (r.value + 0.5).norm()).unwrap_or(f64::INFINITY);
        residual = residual.max(z0 - 1e-10);
        details.push_str(&format!("; |zeta(0) + 1/2| = {z0:.3e}"));
    }
    let mut r = CheckResult::judged(id, residual, 0.0, n_samples, details);
    r.duration_ms = start.elapsed().as_millis() as u64;
    r
}

/// `3 + 4 cos(theta) + cos(2 theta)`, which equals `2 (1 + cos theta)^2`.
pub fn mertens_expression(theta: f64) -> f64 {
    3.0 + 4.0 * theta.cos() + (2.0 * theta).cos()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::check::Verdict;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn rect_validation() {
        assert!(Rect::new(1.0, 0.0, 0.0, 1.0).is_err());
        assert!(Rect::new(0.0, 1.0, 2.0, 2.0).is_err());
        let r = Rect::new(0.0, 1.0, 0.0, 2.0).unwrap();
        assert!(r.contains_strictly(c(0.5, 1.0)));
        assert!(!r.contains_strictly(c(1.0, 1.0)));
        assert_eq!(r.boundary_distance(c(0.5, 1.0)), 0.5);
    }

    #[test]
    fn census_examples() {
        let cfg = EvalConfig::default();
        assert_eq!(count_zeros_rect(&Rect::new(0.0, 1.0, 2.0, 12.0).unwrap(), 64, &cfg).unwrap(), 0);
        assert_eq!(count_zeros_rect(&Rect::new(0.5, 1.5, -0.5, 0.5).unwrap(), 64, &cfg).unwrap(), -1);
        assert_eq!(count_zeros_rect(&Rect::new(-3.0, -1.0, -0.5, 0.5).unwrap(), 64, &cfg).unwrap(), 1);
    }

    #[test]
    fn census_refusals() {
        let cfg = EvalConfig::default();
        let r = Rect::new(-2.0, -1.0, -0.5, 0.5).unwrap();
        assert!(matches!(count_zeros_rect(&r, 64, &cfg), Err(ZetaError::BoundaryTooCloseToZero(_))));
        let r = Rect::new(0.0, 1.0, 2.0, 12.0).unwrap();
        assert!(count_zeros_rect(&r, 10, &cfg).is_err());
    }

    #[test]
    fn no_zeros_below_ten() {
        let cfg = EvalConfig::default();
        assert!(find_critical_zeros(1.0, 10.0, 0.01, &cfg).unwrap().is_empty());
        assert!(find_critical_zeros(1.0, 10.0, 0.1, &cfg).is_err());
    }

    #[test]
    fn multiplicity_examples() {
        let cfg = EvalConfig::default();
        let f = |p: Complex64| zeta(p, &cfg).map(|r| r.value);
        let at_pole = multiplicity(f, c(1.0, 0.0), 1e-4).unwrap();
        assert!((at_pole.value + 1.0).abs() < 1e-2, "{at_pole:?}");
        let regular = multiplicity(f, c(2.0, 0.0), 1e-4).unwrap();
        assert!(regular.value.abs() < 1e-2);
        let trivial = multiplicity(f, c(-2.0, 0.0), 1e-4).unwrap();
        assert!((trivial.value - 1.0).abs() < 1e-2);
        assert!(multiplicity(f, c(2.0, 0.0), 1e-2).is_err());
    }

    #[test]
    fn multiplicity_of_polynomial_orders() {
        let cube = |p: Complex64| Ok((p - 0.3).powu(3));
        assert!((multiplicity(cube, c(0.3, 0.0), 1e-4).unwrap().value - 3.0).abs() < 1e-6);
        let inv = |p: Complex64| Ok((p - 0.3).powu(2).inv());
        assert!((multiplicity(inv, c(0.3, 0.0), 1e-4).unwrap().value + 2.0).abs() < 1e-2);
    }

    #[test]
    fn line_checks_pass() {
        let cfg = EvalConfig::default();
        assert_eq!(check_line_zeros(1.0, 10.0, &cfg).verdict, Verdict::Pass);
        assert_eq!(check_line_zeros(0.0, 10.0, &cfg).verdict, Verdict::Pass);
        assert_eq!(check_line_zeros(0.5, 10.0, &cfg).verdict, Verdict::Fail);
    }

    #[test]
    fn mertens_expression_is_a_square() {
        for k in 0..100 {
            let t = k as f64 * 0.0731;
            assert!((mertens_expression(t) - 2.0 * (1.0 + t.cos()).powi(2)).abs() < 1e-13);
        }
        assert!(mertens_expression(PI).abs() < 1e-15);
    }
}
