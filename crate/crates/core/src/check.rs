use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
    Finding,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
            Verdict::Finding => "finding",
        }
    }
}

impl std::fmt::Display for Verdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Outcome of one registered check. Field order is the report field order.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CheckResult {
    pub id: String,
    pub verdict: Verdict,
    pub worst_residual: f64,
    pub tolerance: f64,
    pub n_samples: u64,
    pub details: String,
    pub duration_ms: u64,
}

impl CheckResult {
    /// Pass iff `worst_residual <= tolerance`; a NaN residual fails.
    pub fn judged(id: &str, worst_residual: f64, tolerance: f64, n_samples: u64, details: String) -> Self {
        let pass = worst_residual <= tolerance;
        Self::build(id, if pass { Verdict::Pass } else { Verdict::Fail }, worst_residual, tolerance, n_samples, details)
    }

    /// A measured residual that is reported without a verdict.
    pub fn finding(id: &str, worst_residual: f64, tolerance: f64, n_samples: u64, details: String) -> Self {
        Self::build(id, Verdict::Finding, worst_residual, tolerance, n_samples, details)
    }

    fn build(id: &str, verdict: Verdict, worst_residual: f64, tolerance: f64, n_samples: u64, mut details: String) -> Self {
        // JSON has no infinities; keep the ordering and say so in the details.
        let worst = if worst_residual.is_finite() {
            worst_residual
        } else {
            details.push_str(&format!("; residual was {worst_residual}"));
            f64::MAX
        };
        Self {
            id: id.to_string(),
            verdict,
            worst_residual: worst,
            tolerance,
            n_samples,
            details,
            duration_ms: 0,
        }
    }

    pub fn is_failure(&self) -> bool {
        self.verdict == Verdict::Fail
    }
}
