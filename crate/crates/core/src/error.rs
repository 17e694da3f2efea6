use num_complex::Complex64;
use thiserror::Error;

/// Every failure an evaluator, sieve or census can report.
///
/// Mathematical degeneracies (poles, vanishing denominators) are reported here
/// instead of being encoded as `NaN` or infinities in a returned value.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum ZetaError {
    #[error("Gamma has a pole at the non-positive integer near {0}")]
    PoleAtNonPositiveInteger(Complex64),

    #[error("overflow evaluating {what} at {at}")]
    Overflow { what: &'static str, at: Complex64 },

    #[error("zeta has a pole at s = 1 (got {0})")]
    PoleAtOne(Complex64),

    #[error("{0} is within 1e-9 of a zero of the eta factor 1 - 2^(1-s)")]
    EtaFactorZero(Complex64),

    #[error("{what}: argument {at} is outside the domain ({domain})")]
    DomainError {
        what: &'static str,
        at: Complex64,
        domain: &'static str,
    },

    #[error("quadrature did not reach tolerance {tol:e} within {evals} panel evaluations (estimate {estimate:e})")]
    QuadratureFailure { tol: f64, estimate: f64, evals: usize },

    #[error("table bound {requested} exceeds the configured budget {limit}")]
    CapacityError { requested: usize, limit: usize },

    #[error("table bound {0} is below the minimum of 2")]
    InvalidBound(usize),

    #[error("coefficient sequences have different bounds ({0} vs {1})")]
    BoundMismatch(usize, usize),

    #[error("conj_ratio is undefined at u = v = 0")]
    ZeroInput,

    #[error("{0} is too close to a zero of zeta (|zeta| = {1:e})")]
    NearZeroOfZeta(Complex64, f64),

    #[error("{0} is too close to a pole")]
    NearPole(Complex64),

    #[error("denominator 1 - 2^(1-s) vanishes near {0}")]
    DenominatorZero(Complex64),

    #[error("eta(2s) vanishes near s = {0}")]
    EtaTwoSZero(Complex64),

    #[error("contour boundary passes too close to a zero near {0}")]
    BoundaryTooCloseToZero(Complex64),

    #[error("winding sum {0} is not within 0.1 of an integer")]
    NonIntegerWinding(f64),

    #[error("invalid rectangle: {0}")]
    InvalidRect(String),

    #[error("evaluation failed: {0}")]
    EvaluationFailure(String),

    #[error("unknown check id `{0}`")]
    UnknownCheckId(String),

    #[error("i/o error: {0}")]
    Io(String),
}

impl From<std::io::Error> for ZetaError {
    fn from(e: std::io::Error) -> Self {
        ZetaError::Io(e.to_string())
    }
}

pub type Result<T, E = ZetaError> = std::result::Result<T, E>;
