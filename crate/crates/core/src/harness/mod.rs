//! Claim registry, runner, reports and grid scans.
//!
//! Each check draws its samples from ChaCha8 seeded with the run seed, on a
//! stream selected by the FNV-1a hash of the check id, so results do not
//! depend on which other checks run or in what order.

mod checks;
pub mod report;
pub mod scan;

use std::collections::BTreeMap;
use std::path::PathBuf;
use std::time::Instant;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::check::{CheckResult, Verdict};
use crate::error::{Result, ZetaError};
use crate::zeta::EvalConfig;

pub use report::{emit_report, ReportFormat};
pub use scan::{grid_scan, write_scan_csv, Quantity, ScanCell};

/// Report schema version.
pub const REPORT_VERSION: &str = "1";
/// Environment variable that replaces the default seed.
pub const SEED_ENV: &str = "ZETALAB_SEED";
pub const DEFAULT_SEED: u64 = 20_240_101;

/// Sample counts and bounds used by the checks.
#[derive(Debug, Clone, PartialEq)]
pub struct GridSizes {
    pub conj_pairs: usize,
    pub symmetry_points: usize,
    pub critline_points: usize,
    pub funceq_points: usize,
    pub euler_points: usize,
    pub euler_prime_bound: usize,
    pub mertens_samples: usize,
    pub kappa_grid: usize,
    pub series_bound: usize,
    pub zero_scan_t_max: f64,
    pub line_t_max: f64,
}

impl Default for GridSizes {
    fn default() -> Self {
        Self {
            conj_pairs: 1000,
            symmetry_points: 200,
            critline_points: 50,
            funceq_points: 100,
            euler_points: 50,
            euler_prime_bound: 1_000_000,
            mertens_samples: 10_000,
            kappa_grid: 40,
            series_bound: 1_000_000,
            zero_scan_t_max: 30.0,
            line_t_max: 40.0,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub seed: u64,
    pub tolerance_overrides: BTreeMap<String, f64>,
    pub grid: GridSizes,
    pub output: Option<PathBuf>,
    pub eval: EvalConfig,
}

impl Default for RunConfig {
    fn default() -> Self {
        Self {
            seed: DEFAULT_SEED,
            tolerance_overrides: BTreeMap::new(),
            grid: GridSizes::default(),
            output: None,
            eval: EvalConfig::default(),
        }
    }
}

impl RunConfig {
    pub fn with_seed(seed: u64) -> Self {
        Self { seed, ..Self::default() }
    }

    /// Default configuration with the seed taken from `ZETALAB_SEED` when set.
    pub fn from_env() -> Result<Self> {
        let mut cfg = Self::default();
        if let Ok(v) = std::env::var(SEED_ENV) {
            cfg.seed = v
                .trim()
                .parse()
                .map_err(|_| ZetaError::EvaluationFailure(format!("{SEED_ENV}={v:?} is not an unsigned integer")))?;
        }
        Ok(cfg)
    }

    fn tolerance(&self, spec: &CheckSpec) -> f64 {
        self.tolerance_overrides.get(spec.id).copied().unwrap_or(spec.tolerance)
    }
}

/// A registered claim check.
#[derive(Debug, Clone, Copy)]
pub struct CheckSpec {
    pub id: &'static str,
    pub claim: &'static str,
    pub tolerance: f64,
    pub finding: bool,
    run: fn(&mut Ctx) -> Outcome,
}

/// What a check measured, before the verdict is attached.
pub(crate) struct Outcome {
    pub residual: f64,
    pub n_samples: u64,
    pub details: String,
}

pub(crate) struct Ctx<'a> {
    pub rng: ChaCha8Rng,
    pub cfg: &'a RunConfig,
}

/// The registry in report order.
pub fn registry() -> &'static [CheckSpec] {
    &REGISTRY
}

static REGISTRY: [CheckSpec; 18] = [
    CheckSpec { id: "P1_CONJ_RATIO", claim: "conj_ratio(u,v) (u+iv) = u-iv and |conj_ratio| = 1", tolerance: 1e-14, finding: false, run: checks::conj_ratio_identity },
    CheckSpec { id: "P2_SYMMETRY", claim: "zeta(conj s) = conj zeta(s) in all three evaluation regions", tolerance: 1e-12, finding: false, run: checks::symmetry },
    CheckSpec { id: "P3_NU_CRITLINE", claim: "nu(1/2 + it) = 1", tolerance: 1e-8, finding: false, run: checks::nu_critline },
    CheckSpec { id: "P5_NU_ZEROS", claim: "nu vanishes exactly at 0, -2, -4, ...", tolerance: 0.0, finding: false, run: checks::nu_zeros },
    CheckSpec { id: "P6_NU_POLES", claim: "nu has poles exactly at 1, 3, 5, ... and not at -1, -3, ...", tolerance: 0.0, finding: false, run: checks::nu_poles },
    CheckSpec { id: "P7_ZERO_REFLECTION", claim: "zeta(rho) = 0 implies zeta(1 - conj rho) = 0", tolerance: 1e-5, finding: false, run: checks::zero_reflection },
    CheckSpec { id: "P9_POLE", claim: "simple pole of residue 1 at s = 1", tolerance: 1e-4, finding: false, run: checks::pole },
    CheckSpec { id: "EQ33_EULER_BOUND", claim: "|zeta(s)| >= exp(-sum_p p^-alpha) for Re s = alpha > 1", tolerance: 0.0, finding: false, run: checks::euler_bound },
    CheckSpec { id: "SEC4_TRIVIAL_ZEROS", claim: "zeta(-2k) = 0", tolerance: 1e-10, finding: false, run: checks::trivial_zeros },
    CheckSpec { id: "EQ44_MERTENS", claim: "3 + 4 cos t + cos 2t >= 0", tolerance: 1e-12, finding: false, run: checks::mertens },
    CheckSpec { id: "EQ46_W_INEQUALITY", claim: "3 w(zeta,1) + 4 w(zeta,1+ib) + w(zeta,1+2ib) <= 0", tolerance: 0.1, finding: false, run: checks::w_inequality },
    CheckSpec { id: "SEC5_LINES", claim: "no zeros on Re s = 0 and Re s = 1; zeta(0) = -1/2", tolerance: 0.0, finding: false, run: checks::lines },
    CheckSpec { id: "FUNCEQ_34", claim: "zeta(s) = pi^(s-1/2) Gamma((1-s)/2) / Gamma(s/2) zeta(1-s)", tolerance: 1e-8, finding: false, run: checks::funceq },
    CheckSpec { id: "EQ54_LIOUVILLE", claim: "sum lambda(n) n^-s = zeta(2s) / zeta(s)", tolerance: 1e-4, finding: false, run: checks::liouville },
    CheckSpec { id: "EQ56_SIGMA", claim: "sum sigma(n) n^-s = zeta(s) / zeta(2s) with sigma(n) = [2|n] sum_{d|n/2} mu(d)", tolerance: 0.0, finding: true, run: checks::sigma },
    CheckSpec { id: "EQ58_PRODUCT", claim: "sum lambda(n) n^-s * sum sigma(n) n^-s = 1", tolerance: 0.0, finding: true, run: checks::product },
    CheckSpec { id: "EQ61_KAPPA", claim: "kappa = eta(s)/eta(2s) is finite and nonzero in 1/2 < Re s < 1", tolerance: 1e-12, finding: false, run: checks::kappa_grid },
    CheckSpec { id: "KAPPA_REALNESS", claim: "kappa is real-valued in the strip", tolerance: 0.0, finding: true, run: checks::kappa_realness },
];

/// Look up a registered check.
pub fn check_spec(id: &str) -> Result<&'static CheckSpec> {
    REGISTRY.iter().find(|c| c.id == id).ok_or_else(|| ZetaError::UnknownCheckId(id.to_string()))
}

/// 64-bit FNV-1a.
pub fn fnv1a(bytes: &[u8]) -> u64 {
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for &b in bytes {
        h ^= b as u64;
        h = h.wrapping_mul(0x0000_0100_0000_01b3);
    }
    h
}

/// The sampling generator of one check.
pub fn check_rng(seed: u64, id: &str) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(fnv1a(id.as_bytes()));
    rng
}

/// Run one registered check. Mathematical failures, including panics inside
/// the check, become a failing verdict.
pub fn run_check(id: &str, cfg: &RunConfig) -> Result<CheckResult> {
    let spec = check_spec(id)?;
    Ok(execute(spec, cfg))
}

fn execute(spec: &CheckSpec, cfg: &RunConfig) -> CheckResult {
    let start = Instant::now();
    let mut ctx = Ctx { rng: check_rng(cfg.seed, spec.id), cfg };
    let outcome = std::panic::catch_unwind(std::panic::AssertUnwindSafe(|| (spec.run)(&mut ctx)))
        .unwrap_or_else(|p| {
            let msg = p
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_else(|| "panic".to_string());
            Outcome { residual: f64::INFINITY, n_samples: 0, details: format!("check aborted: {msg}") }
        });
    let tol = cfg.tolerance(spec);
    let mut r = if spec.finding {
        CheckResult::finding(spec.id, outcome.residual, tol, outcome.n_samples, outcome.details)
    } else {
        CheckResult::judged(spec.id, outcome.residual, tol, outcome.n_samples, outcome.details)
    };
    r.duration_ms = start.elapsed().as_millis() as u64;
    r
}

/// Run the given ids (all registered checks when `only` is empty) in
/// parallel and return them in registry order.
pub fn run_selected(only: &[String], cfg: &RunConfig) -> Result<Vec<CheckResult>> {
    for id in only {
        check_spec(id)?;
    }
    let specs: Vec<&CheckSpec> = REGISTRY
        .iter()
        .filter(|s| only.is_empty() || only.iter().any(|o| o == s.id))
        .collect();
    Ok(specs.par_iter().map(|s| execute(s, cfg)).collect())
}

/// Run the full registry in registry order.
pub fn run_all(cfg: &RunConfig) -> Vec<CheckResult> {
    REGISTRY.par_iter().map(|s| execute(s, cfg)).collect()
}

/// Process exit code for a set of results: 1 iff any pass/fail check failed.
pub fn exit_code(results: &[CheckResult]) -> i32 {
    results.iter().any(CheckResult::is_failure) as i32
}

/// Counts of (pass, fail, finding).
pub fn tally(results: &[CheckResult]) -> (usize, usize, usize) {
    let count = |v| results.iter().filter(|r| r.verdict == v).count();
    (count(Verdict::Pass), count(Verdict::Fail), count(Verdict::Finding))
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::RngCore;

    #[test]
    fn fnv1a_reference_values() {
        assert_eq!(fnv1a(b""), 0xcbf2_9ce4_8422_2325);
        assert_eq!(fnv1a(b"a"), 0xaf63_dc4c_8601_ec8c);
    }

    #[test]
    fn registry_ids_are_unique() {
        let mut ids: Vec<_> = registry().iter().map(|c| c.id).collect();
        ids.sort();
        ids.dedup();
        assert_eq!(ids.len(), registry().len());
    }

    #[test]
    fn streams_differ_by_id() {
        let a = check_rng(1, "P1_CONJ_RATIO").next_u64();
        let b = check_rng(1, "P2_SYMMETRY").next_u64();
        assert_ne!(a, b);
        assert_eq!(a, check_rng(1, "P1_CONJ_RATIO").next_u64());
    }

    #[test]
    fn unknown_id() {
        let cfg = RunConfig::default();
        assert!(matches!(run_check("NOPE", &cfg), Err(ZetaError::UnknownCheckId(_))));
        assert!(run_selected(&["NOPE".to_string()], &cfg).is_err());
    }

    #[test]
    fn exit_code_ignores_findings() {
        let pass = CheckResult::judged("a", 0.0, 1.0, 1, String::new());
        let finding = CheckResult::finding("b", 9.0, 0.0, 1, String::new());
        let fail = CheckResult::judged("c", 2.0, 1.0, 1, String::new());
        assert_eq!(exit_code(&[pass.clone(), finding.clone()]), 0);
        assert_eq!(exit_code(&[pass, finding, fail]), 1);
    }
}
