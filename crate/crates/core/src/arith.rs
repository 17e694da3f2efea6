//! Arithmetic functions, sieves, Dirichlet convolution and truncated
//! Dirichlet series.
//!
//! Conventions: `big_omega` counts prime factors with multiplicity and
//! `big_omega(1) = 0`, so `liouville(1) = 1`. `sigma_paper` is the divisor
//! sum `sum_{d | n/2} mu(d)` for even `n` and `0` for odd `n`, taken
//! literally; it collapses to the indicator of `n = 2`.

use std::io::Write;

use num_complex::Complex64;

use crate::error::{Result, ZetaError};
use crate::specfun::{real_pow_neg, EvalResult, Method, EPS};

/// Largest bound [`build_table`] accepts.
pub const MAX_TABLE_BOUND: usize = 100_000_000;

/// Bound up to which the Moebius inversion identity is re-checked on
/// construction.
const SELF_CHECK_BOUND: usize = 10_000;

/// Sieved arithmetic functions on `1..=bound`. Index `0` of every array is a
/// placeholder so that `table.mu()[n]` is `mu(n)`.
#[derive(Debug, Clone)]
pub struct ArithTable {
    bound: usize,
    mu: Vec<i8>,
    big_omega: Vec<u8>,
    liouville: Vec<i8>,
    mangoldt: Vec<f64>,
    sigma_paper: Vec<i64>,
    primes: Vec<u32>,
}

/// Column selector for tables and the `sieve` CSV dump.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArithFn {
    Mu,
    BigOmega,
    Liouville,
    Mangoldt,
    Sigma,
}

impl ArithTable {
    pub fn bound(&self) -> usize {
        self.bound
    }
    pub fn mu(&self) -> &[i8] {
        &self.mu
    }
    pub fn big_omega(&self) -> &[u8] {
        &self.big_omega
    }
    pub fn liouville(&self) -> &[i8] {
        &self.liouville
    }
    pub fn mangoldt(&self) -> &[f64] {
        &self.mangoldt
    }
    pub fn sigma_paper(&self) -> &[i64] {
        &self.sigma_paper
    }
    /// Primes up to the bound, ascending.
    pub fn primes(&self) -> &[u32] {
        &self.primes
    }

    /// The selected column as a coefficient sequence.
    pub fn coeffs(&self, which: ArithFn) -> CoeffSeq {
        let n = self.bound;
        match which {
            ArithFn::Mu => CoeffSeq::from_fn(n, |k| self.mu[k] as f64),
            ArithFn::BigOmega => CoeffSeq::from_fn(n, |k| self.big_omega[k] as f64),
            ArithFn::Liouville => CoeffSeq::from_fn(n, |k| self.liouville[k] as f64),
            ArithFn::Sigma => CoeffSeq::from_fn(n, |k| self.sigma_paper[k] as f64),
            ArithFn::Mangoldt => {
                let mut seq = CoeffSeq::from_fn(n, |k| self.mangoldt[k]);
                seq.tail = TailBound::Logarithmic(1.0);
                seq
            }
        }
    }

    /// Write `n,value` rows for `1..=bound`.
    pub fn write_csv<W: Write>(&self, which: ArithFn, out: W) -> Result<()> {
        let mut w = csv::Writer::from_writer(out);
        let io = |e: csv::Error| ZetaError::Io(e.to_string());
        w.write_record(["n", "value"]).map_err(io)?;
        for n in 1..=self.bound {
            let v = match which {
                ArithFn::Mu => self.mu[n].to_string(),
                ArithFn::BigOmega => self.big_omega[n].to_string(),
                ArithFn::Liouville => self.liouville[n].to_string(),
                ArithFn::Mangoldt => self.mangoldt[n].to_string(),
                ArithFn::Sigma => self.sigma_paper[n].to_string(),
            };
            w.write_record([n.to_string(), v]).map_err(io)?;
        }
        w.flush()?;
        Ok(())
    }
}

/// Linear sieve over `1..=n` producing every column of [`ArithTable`].
pub fn build_table(n: usize) -> Result<ArithTable> {
    if n < 2 {
        return Err(ZetaError::InvalidBound(n));
    }
    if n > MAX_TABLE_BOUND {
        return Err(ZetaError::CapacityError {
            requested: n,
            limit: MAX_TABLE_BOUND,
        });
    }
    let mut lpf = vec![0u32; n + 1];
    // highest power of the least prime factor dividing k
    let mut lpf_pow = vec![0u32; n + 1];
    let mut mu = vec![0i8; n + 1];
    let mut big_omega = vec![0u8; n + 1];
    let mut primes: Vec<u32> = Vec::new();
    mu[1] = 1;
    for i in 2..=n {
        if lpf[i] == 0 {
            lpf[i] = i as u32;
            lpf_pow[i] = i as u32;
            mu[i] = -1;
            big_omega[i] = 1;
            primes.push(i as u32);
        }
        let li = lpf[i];
        for &p in &primes {
            let ip = i * p as usize;
            if p > li || ip > n {
                break;
            }
            lpf[ip] = p;
            big_omega[ip] = big_omega[i] + 1;
            if p == li {
                mu[ip] = 0;
                lpf_pow[ip] = lpf_pow[i] * p;
            } else {
                mu[ip] = -mu[i];
                lpf_pow[ip] = p;
            }
        }
    }

    let liouville: Vec<i8> = big_omega
        .iter()
        .enumerate()
        .map(|(k, &w)| if k == 0 { 0 } else if w % 2 == 0 { 1 } else { -1 })
        .collect();
    let mut mangoldt = vec![0.0f64; n + 1];
    for k in 2..=n {
        if lpf_pow[k] as usize == k {
            mangoldt[k] = (lpf[k] as f64).ln();
        }
    }

    // Moebius divisor sums D(m) = sum_{d | m} mu(d)
    let dlen = (n / 2).max(n.min(SELF_CHECK_BOUND));
    let mut divsum = vec![0i64; dlen + 1];
    for (d, &md) in mu.iter().enumerate().take(dlen + 1).skip(1) {
        if md != 0 {
            for m in (d..=dlen).step_by(d) {
                divsum[m] += md as i64;
            }
        }
    }
    for (m, &v) in divsum.iter().enumerate().take(n.min(SELF_CHECK_BOUND) + 1).skip(1) {
        assert_eq!(v, i64::from(m == 1), "Moebius inversion fails at {m}");
    }
    let mut sigma_paper = vec![0i64; n + 1];
    for k in (2..=n).step_by(2) {
        sigma_paper[k] = divsum[k / 2];
    }

    Ok(ArithTable {
        bound: n,
        mu,
        big_omega,
        liouville,
        mangoldt,
        sigma_paper,
        primes,
    })
}

/// Primes `<= bound` by the sieve of Eratosthenes.
pub fn primes_up_to(bound: usize) -> Vec<u64> {
    if bound < 2 {
        return Vec::new();
    }
    let mut composite = vec![false; bound + 1];
    let mut out = Vec::new();
    for i in 2..=bound {
        if composite[i] {
            continue;
        }
        out.push(i as u64);
        let mut j = i.saturating_mul(i);
        while j <= bound {
            composite[j] = true;
            j += i;
        }
    }
    out
}

fn mu_by_trial_division(mut m: u64) -> i64 {
    let mut sign = 1;
    let mut p = 2;
    while p * p <= m {
        if m.is_multiple_of(p) {
            m /= p;
            if m.is_multiple_of(p) {
                return 0;
            }
            sign = -sign;
        }
        p += 1;
    }
    if m > 1 {
        sign = -sign;
    }
    sign
}

/// `0` for odd `n`; `sum_{d | n/2} mu(d)` for even `n`, enumerating the
/// divisors of `n/2` directly.
pub fn sigma_paper(n: u64) -> i64 {
    assert!(n >= 1, "sigma_paper is defined for n >= 1");
    if n % 2 == 1 {
        return 0;
    }
    let m = n / 2;
    let mut total = 0;
    let mut d = 1;
    while d * d <= m {
        if m.is_multiple_of(d) {
            total += mu_by_trial_division(d);
            let e = m / d;
            if e != d {
                total += mu_by_trial_division(e);
            }
        }
        d += 1;
    }
    total
}

/// Growth assumption used for the truncation estimate of a Dirichlet series.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum TailBound {
    /// `|f(n)| <= c`
    Constant(f64),
    /// `|f(n)| <= c ln n`
    Logarithmic(f64),
}

/// Dirichlet-series coefficients `f(1), ..., f(N)`.
#[derive(Debug, Clone, PartialEq)]
pub struct CoeffSeq {
    coeffs: Vec<f64>,
    pub tail: TailBound,
}

impl CoeffSeq {
    /// Coefficients from `f(n)` for `n = 1..=len`; the tail assumption is
    /// the observed maximum modulus.
    pub fn from_fn<F: FnMut(usize) -> f64>(len: usize, mut f: F) -> Self {
        let coeffs: Vec<f64> = (1..=len).map(&mut f).collect();
        Self::from_vec(coeffs)
    }

    pub fn from_vec(coeffs: Vec<f64>) -> Self {
        assert!(coeffs.iter().all(|c| c.is_finite()), "coefficients must be finite");
        let max = coeffs.iter().fold(0.0f64, |m, c| m.max(c.abs()));
        Self {
            coeffs,
            tail: TailBound::Constant(max),
        }
    }

    /// The constant sequence `1` (the coefficients of zeta).
    pub fn ones(len: usize) -> Self {
        Self::from_vec(vec![1.0; len])
    }

    /// The convolution identity `(1, 0, 0, ...)`.
    pub fn delta(len: usize) -> Self {
        Self::from_fn(len, |n| if n == 1 { 1.0 } else { 0.0 })
    }

    /// Coefficients of `sum mu(n) (2n)^(-s)`: `mu(m/2)` at even `m`, else 0.
    pub fn mu_at_doubled(table: &ArithTable) -> Self {
        let mu = table.mu();
        Self::from_fn(table.bound(), |m| if m % 2 == 0 { mu[m / 2] as f64 } else { 0.0 })
    }

    /// `|mu(n)|`, the coefficients of `zeta(s) / zeta(2s)`.
    pub fn abs_mu(table: &ArithTable) -> Self {
        Self::from_fn(table.bound(), |n| (table.mu()[n] as f64).abs())
    }

    /// Number of coefficients `N`.
    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `f(n)` for `1 <= n <= N`.
    pub fn get(&self, n: usize) -> f64 {
        self.coeffs[n - 1]
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.coeffs
    }
}

/// `(f * g)(n) = sum_{ab = n} f(a) g(b)` for `n <= N`.
pub fn dirichlet_convolve(f: &CoeffSeq, g: &CoeffSeq) -> Result<CoeffSeq> {
    if f.len() != g.len() {
        return Err(ZetaError::BoundMismatch(f.len(), g.len()));
    }
    let n = f.len();
    let mut h = vec![0.0; n];
    for a in 1..=n {
        let fa = f.get(a);
        if fa == 0.0 {
            continue;
        }
        for b in 1..=n / a {
            h[a * b - 1] += fa * g.get(b);
        }
    }
    Ok(CoeffSeq::from_vec(h))
}

/// Result of [`dirichlet_series`]. `conditionally_convergent` is set when
/// `0 < Re(s) <= 1`; the error estimate is then infinite.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SeriesSum {
    pub result: EvalResult,
    pub conditionally_convergent: bool,
}

/// Truncated Dirichlet series `sum_{n <= N} f(n) n^(-s)`.
pub fn dirichlet_series(f: &CoeffSeq, s: Complex64) -> Result<SeriesSum> {
    if s.re <= 0.0 {
        return Err(ZetaError::DomainError {
            what: "dirichlet_series",
            at: s,
            domain: "Re(s) > 0",
        });
    }
    let mut sum = Complex64::new(0.0, 0.0);
    let mut abs_sum = 0.0;
    for (i, &c) in f.as_slice().iter().enumerate() {
        if c == 0.0 {
            continue;
        }
        let term = real_pow_neg((i + 1) as f64, s) * c;
        abs_sum += term.norm();
        sum += term;
    }
    let sigma = s.re;
    let big_n = f.len().max(1) as f64;
    let conditional = sigma <= 1.0;
    let tail = if conditional {
        f64::INFINITY
    } else {
        let base = big_n.powf(1.0 - sigma) / (sigma - 1.0);
        match f.tail {
            TailBound::Constant(c) => c * base,
            TailBound::Logarithmic(c) => {
                c * big_n.powf(1.0 - sigma) * (big_n.ln() / (sigma - 1.0) + 1.0 / (sigma - 1.0).powi(2))
            }
        }
    };
    let err = tail + 4.0 * EPS * abs_sum * (1.0 + s.norm());
    Ok(SeriesSum {
        result: EvalResult::new(sum, err, Method::DirectSeries),
        conditionally_convergent: conditional,
    })
}
