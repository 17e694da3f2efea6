use std::f64::consts::PI;

use num_complex::Complex64;
use rand::Rng;
use rayon::prelude::*;

use super::{Ctx, Outcome};
use crate::arith::{build_table, dirichlet_series, primes_up_to, ArithFn, CoeffSeq};
use crate::reflect::{self, classify_nu, kappa, nu, NuKind};
use crate::zeros::{
    check_line_zeros, count_zeros_rect, find_critical_zeros, mertens_expression, multiplicity, Rect,
};
use crate::zeta::{eta, euler_lower_bound, zeta, zeta_floor_integral, zeta_reflect};

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

fn outcome(residual: f64, n_samples: usize, details: String) -> Outcome {
    Outcome { residual, n_samples: n_samples as u64, details }
}

/// Largest of a list of residuals, with NaN (a failed evaluation) dominating.
fn worst(values: impl IntoIterator<Item = f64>) -> f64 {
    values.into_iter().fold(f64::NEG_INFINITY, |m, v| if v.is_nan() || m.is_nan() { f64::NAN } else { m.max(v) })
}

pub(super) fn conj_ratio_identity(ctx: &mut Ctx) -> Outcome {
    let n = ctx.cfg.grid.conj_pairs;
    let mut res: f64 = 0.0;
    for _ in 0..n {
        let u = ctx.rng.gen_range(-1.0..1.0) * 10f64.powf(ctx.rng.gen_range(-3.0..3.0));
        let v = ctx.rng.gen_range(-1.0..1.0) * 10f64.powf(ctx.rng.gen_range(-3.0..3.0));
        let r = match reflect::conj_ratio(u, v) {
            Ok(r) => r,
            Err(_) => return outcome(f64::INFINITY, n, format!("conj_ratio refused ({u}, {v})")),
        };
        let z = c(u, v);
        let identity = (r * z - z.conj()).norm() / z.norm();
        let modulus = (r.norm() - 1.0).abs();
        res = res.max(identity).max(modulus);
    }
    outcome(res, n, format!("max relative residual over {n} pairs with |u|,|v| in [1e-3, 1e3]: {res:.3e}"))
}

pub(super) fn symmetry(ctx: &mut Ctx) -> Outcome {
    let n = ctx.cfg.grid.symmetry_points;
    let regions = [(1.6, 5.0), (0.05, 1.45), (-3.0, -0.05)];
    let pts: Vec<Complex64> = (0..n)
        .map(|i| {
            let (lo, hi) = regions[i % 3];
            c(ctx.rng.gen_range(lo..hi), ctx.rng.gen_range(-25.0..25.0))
        })
        .collect();
    let eval = ctx.cfg.eval;
    let res: Vec<f64> = pts
        .par_iter()
        .map(|&s| match (zeta(s, &eval), zeta(s.conj(), &eval)) {
            (Ok(a), Ok(b)) => (b.value - a.value.conj()).norm(),
            _ => f64::NAN,
        })
        .collect();
    let w = worst(res.iter().copied());
    let per_region: Vec<String> = (0..3)
        .map(|k| {
            let m = worst(res.iter().skip(k).step_by(3).copied());
            format!("Re in ({}, {}): {m:.3e}", regions[k].0, regions[k].1)
        })
        .collect();
    outcome(w, n, format!("max |zeta(conj s) - conj zeta(s)| by region: {}", per_region.join(", ")))
}

pub(super) fn nu_critline(ctx: &mut Ctx) -> Outcome {
    let n = ctx.cfg.grid.critline_points;
    let eval = ctx.cfg.eval;
    let mut ts = Vec::with_capacity(n);
    let mut rejected = 0;
    while ts.len() < n && rejected < 100 * n {
        let t: f64 = ctx.rng.gen_range(1.0..30.0);
        match zeta(c(0.5, t), &eval) {
            Ok(z) if z.value.norm() >= 1e-2 => ts.push(t),
            _ => rejected += 1,
        }
    }
    let res: Vec<f64> = ts
        .par_iter()
        .map(|&t| nu(c(0.5, t), &eval).map(|v| (v.value - 1.0).norm()).unwrap_or(f64::NAN))
        .collect();
    let w = if ts.len() < n { f64::INFINITY } else { worst(res) };
    outcome(
        w,
        ts.len(),
        format!("max |nu(1/2+it) - 1| over t in (1, 30); {rejected} draws rejected for |zeta| < 1e-2"),
    )
}

fn classification_mismatches(expect: &[(f64, bool)], kind: NuKind, ctx: &Ctx) -> (f64, String) {
    let pts: Vec<Complex64> = expect.iter().map(|&(x, _)| c(x, 0.0)).collect();
    let got = classify_nu(&pts, &ctx.cfg.eval);
    let mut bad = 0;
    let mut parts = Vec::new();
    for (g, &(x, want)) in got.iter().zip(expect) {
        if (g.kind == kind) != want {
            bad += 1;
        }
        let flag = if g.low_confidence { "?" } else { "" };
        parts.push(format!("{x}:{}{flag}", g.kind));
    }
    (bad as f64, format!("{bad} misclassified; {}", parts.join(" ")))
}

pub(super) fn nu_zeros(ctx: &mut Ctx) -> Outcome {
    let expect = [
        (0.0, true),
        (-2.0, true),
        (-4.0, true),
        (-6.0, true),
        (-8.0, true),
        (-1.0, false),
        (-3.0, false),
        (-5.0, false),
        (-7.0, false),
    ];
    let (r, d) = classification_mismatches(&expect, NuKind::Zero, ctx);
    outcome(r, expect.len(), d)
}

pub(super) fn nu_poles(ctx: &mut Ctx) -> Outcome {
    let expect = [
        (1.0, true),
        (3.0, true),
        (5.0, true),
        (7.0, true),
        (9.0, true),
        (-1.0, false),
        (-3.0, false),
        (-5.0, false),
        (-7.0, false),
    ];
    let (r, d) = classification_mismatches(&expect, NuKind::Pole, ctx);
    outcome(r, expect.len(), d)
}

pub(super) fn zero_reflection(ctx: &mut Ctx) -> Outcome {
    let eval = ctx.cfg.eval;
    let zeros = match find_critical_zeros(10.0, ctx.cfg.grid.zero_scan_t_max, 0.01, &eval) {
        Ok(z) => z,
        Err(e) => return outcome(f64::INFINITY, 0, format!("zero search failed: {e}")),
    };
    if zeros.is_empty() {
        return outcome(f64::INFINITY, 0, "no zeros found".to_string());
    }
    let one = c(1.0, 0.0);
    let res: Vec<f64> = zeros
        .iter()
        .map(|z| {
            let rho = z.location;
            let a = zeta(one - rho.conj(), &eval).map(|r| r.value.norm()).unwrap_or(f64::NAN);
            let b = zeta(rho.conj(), &eval).map(|r| r.value.norm()).unwrap_or(f64::NAN);
            worst([a, b])
        })
        .collect();
    let ts: Vec<String> = zeros.iter().map(|z| format!("{:.6}", z.location.im)).collect();
    outcome(
        worst(res),
        zeros.len(),
        format!("max of |zeta(1 - conj rho)|, |zeta(conj rho)| at t = {}", ts.join(", ")),
    )
}

pub(super) fn pole(ctx: &mut Ctx) -> Outcome {
    let eval = ctx.cfg.eval;
    let s = c(1.0 + 1e-6, 0.0);
    let residue = zeta_floor_integral(s, &eval)
        .map(|z| ((s - 1.0) * z.value - 1.0).norm())
        .unwrap_or(f64::NAN);
    let w = multiplicity(|p| zeta(p, &eval).map(|r| r.value), c(1.0, 0.0), 1e-4)
        .map(|m| m.value)
        .unwrap_or(f64::NAN);
    let count = Rect::new(0.5, 1.5, -0.5, 0.5).and_then(|r| count_zeros_rect(&r, 64, &eval));
    let mut mismatches = 0;
    if !((w + 1.0).abs() <= 1e-2) {
        mismatches += 1;
    }
    if count != Ok(-1) {
        mismatches += 1;
    }
    let residual = if mismatches > 0 { f64::INFINITY } else { residue };
    outcome(
        residual,
        3,
        format!(
            "|(s-1) zeta(s) - 1| at s = 1 + 1e-6 via the fractional-part integral: {residue:.3e}; \
             w(zeta, 1) = {w:.6}; winding count around s = 1: {count:?}"
        ),
    )
}

pub(super) fn euler_bound(ctx: &mut Ctx) -> Outcome {
    let n = ctx.cfg.grid.euler_points;
    let primes = primes_up_to(ctx.cfg.grid.euler_prime_bound);
    let eval = ctx.cfg.eval;
    let pts: Vec<Complex64> = (0..n).map(|_| c(ctx.rng.gen_range(1.1..4.0), ctx.rng.gen_range(-30.0..30.0))).collect();
    let res: Vec<(f64, f64)> = pts
        .par_iter()
        .map(|&s| {
            let bound = euler_lower_bound(s.re, &primes);
            let z = zeta(s, &eval).map(|r| r.value.norm()).unwrap_or(f64::NAN);
            (bound - z, z / bound)
        })
        .collect();
    let min_ratio = res.iter().map(|r| r.1).fold(f64::INFINITY, f64::min);
    outcome(
        worst(res.iter().map(|r| r.0)),
        n,
        format!(
            "max of bound - |zeta| over alpha in (1.1, 4), |beta| < 30, primes <= {}; min |zeta|/bound = {min_ratio:.4}",
            ctx.cfg.grid.euler_prime_bound
        ),
    )
}

pub(super) fn trivial_zeros(ctx: &mut Ctx) -> Outcome {
    let eval = ctx.cfg.eval;
    let vals: Vec<f64> = (1..=5)
        .map(|k| zeta(c(-2.0 * k as f64, 0.0), &eval).map(|r| r.value.norm()).unwrap_or(f64::NAN))
        .collect();
    outcome(worst(vals.iter().copied()), 5, format!("|zeta(-2k)|, k = 1..5: {vals:?}"))
}

pub(super) fn mertens(ctx: &mut Ctx) -> Outcome {
    let n = ctx.cfg.grid.mertens_samples;
    let mut res = f64::NEG_INFINITY;
    let mut min_val = f64::INFINITY;
    for _ in 0..n {
        let t = ctx.rng.gen_range(0.0..2.0 * PI);
        let v = mertens_expression(t);
        min_val = min_val.min(v);
        res = res.max(-v);
    }
    let at_pi = mertens_expression(PI);
    outcome(
        res.max(at_pi.abs()),
        n + 1,
        format!("min of 3 + 4cos t + cos 2t over samples: {min_val:.3e}; value at t = pi: {at_pi:.3e}"),
    )
}

pub(super) fn w_inequality(ctx: &mut Ctx) -> Outcome {
    let eval = ctx.cfg.eval;
    let f = |p: Complex64| zeta(p, &eval).map(|r| r.value);
    let w = |a: Complex64| multiplicity(f, a, 1e-4).map(|m| m.value).unwrap_or(f64::NAN);
    let w1 = w(c(1.0, 0.0));
    let mut parts = Vec::new();
    let mut vals = Vec::new();
    for beta in [14.134725, 21.022040] {
        let total = 3.0 * w1 + 4.0 * w(c(1.0, beta)) + w(c(1.0, 2.0 * beta));
        parts.push(format!("beta = {beta}: {total:.6}"));
        vals.push(total);
    }
    outcome(worst(vals), 2, format!("3w(1) + 4w(1+ib) + w(1+2ib): {}", parts.join(", ")))
}

pub(super) fn lines(ctx: &mut Ctx) -> Outcome {
    let t_max = ctx.cfg.grid.line_t_max;
    let one = check_line_zeros(1.0, t_max, &ctx.cfg.eval);
    let zero = check_line_zeros(0.0, t_max, &ctx.cfg.eval);
    outcome(
        worst([one.worst_residual, zero.worst_residual]),
        (one.n_samples + zero.n_samples) as usize,
        format!("{}; {}", one.details, zero.details),
    )
}

pub(super) fn funceq(ctx: &mut Ctx) -> Outcome {
    let n = ctx.cfg.grid.funceq_points;
    let eval = ctx.cfg.eval;
    let mut pts = Vec::with_capacity(n);
    let mut rejected = 0;
    while pts.len() < n && rejected < 100 * n {
        let re = ctx.rng.gen_range(0.05..0.95);
        let mag: f64 = ctx.rng.gen_range(0.5..30.0);
        let im = if ctx.rng.gen_bool(0.5) { mag } else { -mag };
        let s = c(re, im);
        match zeta(s, &eval) {
            Ok(z) if z.value.norm() >= 1e-3 => pts.push(s),
            _ => rejected += 1,
        }
    }
    let res: Vec<f64> = pts
        .par_iter()
        .map(|&s| match (zeta(s, &eval), zeta_reflect(s, &eval)) {
            (Ok(a), Ok(b)) => (a.value - b.value).norm(),
            _ => f64::NAN,
        })
        .collect();
    let w = if pts.len() < n { f64::INFINITY } else { worst(res) };
    outcome(
        w,
        pts.len(),
        format!("max |zeta(s) - reflected form| over the strip; {rejected} draws rejected for |zeta| < 1e-3"),
    )
}

const SERIES_POINT: f64 = 3.0;

struct SeriesValues {
    lambda: Complex64,
    sigma: Complex64,
    mu_doubled: Complex64,
    z3: f64,
    z6: f64,
}

fn series_values(bound: usize, ctx: &Ctx) -> Result<SeriesValues, String> {
    let table = build_table(bound).map_err(|e| e.to_string())?;
    let s = c(SERIES_POINT, 0.0);
    let sum = |f: &CoeffSeq| dirichlet_series(f, s).map(|r| r.result.value).map_err(|e| e.to_string());
    let z = |x: f64| zeta(c(x, 0.0), &ctx.cfg.eval).map(|r| r.value.re).map_err(|e| e.to_string());
    Ok(SeriesValues {
        lambda: sum(&table.coeffs(ArithFn::Liouville))?,
        sigma: sum(&table.coeffs(ArithFn::Sigma))?,
        mu_doubled: sum(&CoeffSeq::mu_at_doubled(&table))?,
        z3: z(SERIES_POINT)?,
        z6: z(2.0 * SERIES_POINT)?,
    })
}

pub(super) fn liouville(ctx: &mut Ctx) -> Outcome {
    let bound = ctx.cfg.grid.series_bound;
    match series_values(bound, ctx) {
        Ok(v) => {
            let r = (v.lambda.re - v.z6 / v.z3).abs();
            let doubled = (v.mu_doubled.re - 1.0 / v.z6).abs();
            outcome(
                r,
                bound,
                format!(
                    "sum_(n <= {bound}) lambda(n) n^-3 = {:.12}, zeta(6)/zeta(3) = {:.12}; \
                     literal sum mu(n) (2n)^-3 = {:.12} differs from 1/zeta(6) by {doubled:.6e}",
                    v.lambda.re,
                    v.z6 / v.z3,
                    v.mu_doubled.re
                ),
            )
        }
        Err(e) => outcome(f64::INFINITY, 0, e),
    }
}

pub(super) fn sigma(ctx: &mut Ctx) -> Outcome {
    let bound = ctx.cfg.grid.series_bound;
    match series_values(bound, ctx) {
        Ok(v) => {
            let claim = v.z3 / v.z6;
            outcome(
                (v.sigma.re - claim).abs(),
                bound,
                format!(
                    "sum_(n <= {bound}) sigma(n) n^-3 = {} (only n = 2 survives); zeta(3)/zeta(6) = {claim:.12}",
                    v.sigma.re
                ),
            )
        }
        Err(e) => outcome(f64::INFINITY, 0, e),
    }
}

pub(super) fn product(ctx: &mut Ctx) -> Outcome {
    let bound = ctx.cfg.grid.series_bound;
    match series_values(bound, ctx) {
        Ok(v) => {
            let p = (v.lambda * v.sigma).re;
            outcome(
                (p - 1.0).abs(),
                bound,
                format!(
                    "sum lambda(n) n^-3 * sum sigma(n) n^-3 = {p:.12}; 0.125 zeta(6)/zeta(3) = {:.12}",
                    0.125 * v.z6 / v.z3
                ),
            )
        }
        Err(e) => outcome(f64::INFINITY, 0, e),
    }
}

/// Cell-centred grid over `0.55 < Re s < 0.95`, `0 < Im s < 30`.
fn kappa_points(n: usize) -> Vec<Complex64> {
    let (re0, re1, im0, im1) = (0.55, 0.95, 0.0, 30.0);
    let mut pts = Vec::with_capacity(n * n);
    for i in 0..n {
        for j in 0..n {
            let re = re0 + (re1 - re0) * (i as f64 + 0.5) / n as f64;
            let im = im0 + (im1 - im0) * (j as f64 + 0.5) / n as f64;
            pts.push(c(re, im));
        }
    }
    pts
}

struct KappaCell {
    abs: f64,
    im: f64,
    identity: f64,
}

fn kappa_cells(ctx: &Ctx) -> Vec<Option<KappaCell>> {
    let eval = ctx.cfg.eval;
    kappa_points(ctx.cfg.grid.kappa_grid)
        .par_iter()
        .map(|&s| {
            let k = kappa(s, &eval).ok()?;
            let e1 = eta(s, &eval).ok()?.value;
            let e2 = eta(s * 2.0, &eval).ok()?.value;
            Some(KappaCell {
                abs: k.value.norm(),
                im: k.value.im.abs(),
                identity: (e1 - k.value * e2).norm() / e1.norm().max(f64::MIN_POSITIVE),
            })
        })
        .collect()
}

pub(super) fn kappa_grid(ctx: &mut Ctx) -> Outcome {
    let cells = kappa_cells(ctx);
    let ok: Vec<&KappaCell> = cells.iter().flatten().collect();
    let skipped = cells.len() - ok.len();
    let out_of_range = ok.iter().filter(|k| !(k.abs > 1e-6 && k.abs < 1e6)).count();
    let identity = ok.iter().map(|k| k.identity).fold(0.0, f64::max);
    let min_abs = ok.iter().map(|k| k.abs).fold(f64::INFINITY, f64::min);
    let max_abs = ok.iter().map(|k| k.abs).fold(0.0, f64::max);
    outcome(
        identity + out_of_range as f64,
        cells.len(),
        format!(
            "|kappa| in [{min_abs:.4e}, {max_abs:.4e}], {out_of_range} cells outside (1e-6, 1e6), \
             {skipped} cells not evaluable; max relative |eta(s) - kappa eta(2s)| = {identity:.3e}"
        ),
    )
}

pub(super) fn kappa_realness(ctx: &mut Ctx) -> Outcome {
    let cells = kappa_cells(ctx);
    let ok: Vec<&KappaCell> = cells.iter().flatten().collect();
    let max_im = ok.iter().map(|k| k.im).fold(0.0, f64::max);
    let mean_im = ok.iter().map(|k| k.im).sum::<f64>() / ok.len().max(1) as f64;
    outcome(
        max_im,
        cells.len(),
        format!("max |Im kappa| = {max_im:.6e}, mean |Im kappa| = {mean_im:.6e} over {} evaluable cells", ok.len()),
    )
}
