use std::io::Write;

use serde::{Deserialize, Serialize};

use super::REPORT_VERSION;
use crate::check::CheckResult;
use crate::error::{Result, ZetaError};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReportFormat {
    Json,
    Csv,
    Text,
}

impl std::str::FromStr for ReportFormat {
    type Err = ZetaError;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "json" => Ok(Self::Json),
            "csv" => Ok(Self::Csv),
            "text" => Ok(Self::Text),
            other => Err(ZetaError::EvaluationFailure(format!("unknown report format `{other}`"))),
        }
    }
}

/// The JSON report document.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub version: String,
    pub seed: u64,
    pub results: Vec<CheckResult>,
}

/// Serialize results. Field order is fixed; only `duration_ms` varies
/// between runs with the same configuration.
pub fn emit_report(results: &[CheckResult], seed: u64, format: ReportFormat) -> Result<Vec<u8>> {
    let mut out = Vec::new();
    match format {
        ReportFormat::Json => {
            let doc = Report { version: REPORT_VERSION.to_string(), seed, results: results.to_vec() };
            serde_json::to_writer_pretty(&mut out, &doc).map_err(|e| ZetaError::Io(e.to_string()))?;
            out.push(b'\n');
        }
        ReportFormat::Csv => {
            let mut w = csv::Writer::from_writer(&mut out);
            let io = |e: csv::Error| ZetaError::Io(e.to_string());
            w.write_record(["id", "verdict", "worst_residual", "tolerance", "n_samples"]).map_err(io)?;
            for r in results {
                w.write_record([
                    r.id.clone(),
                    r.verdict.to_string(),
                    format!("{:e}", r.worst_residual),
                    format!("{:e}", r.tolerance),
                    r.n_samples.to_string(),
                ])
                .map_err(io)?;
            }
            w.flush()?;
        }
        ReportFormat::Text => {
            let width = results.iter().map(|r| r.id.len()).max().unwrap_or(0);
            for r in results {
                writeln!(
                    out,
                    "{:<width$}  {:<7}  residual {:>10.3e}  tol {:>8.1e}  n {:>7}  {}",
                    r.id,
                    r.verdict.as_str(),
                    r.worst_residual,
                    r.tolerance,
                    r.n_samples,
                    r.details
                )?;
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> Vec<CheckResult> {
        vec![
            CheckResult::judged("A_CHECK", 1e-10, 1e-8, 10, "fine".into()),
            CheckResult::finding("LONGER_CHECK_ID", 0.5, 0.0, 3, "measured, with comma".into()),
        ]
    }

    #[test]
    fn json_schema() {
        let bytes = emit_report(&sample(), 7, ReportFormat::Json).unwrap();
        let v: serde_json::Value = serde_json::from_slice(&bytes).unwrap();
        let keys: Vec<_> = v.as_object().unwrap().keys().cloned().collect();
        assert_eq!(keys, ["results", "seed", "version"]);
        assert_eq!(v["seed"], 7);
        assert_eq!(v["results"][1]["verdict"], "finding");
        let text = String::from_utf8(bytes).unwrap();
        let order = ["\"id\"", "\"verdict\"", "\"worst_residual\"", "\"tolerance\"", "\"n_samples\"", "\"details\"", "\"duration_ms\""];
        let pos: Vec<_> = order.iter().map(|k| text.find(k).unwrap()).collect();
        assert!(pos.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn csv_columns() {
        let text = String::from_utf8(emit_report(&sample(), 7, ReportFormat::Csv).unwrap()).unwrap();
        let mut lines = text.lines();
        assert_eq!(lines.next().unwrap(), "id,verdict,worst_residual,tolerance,n_samples");
        assert_eq!(lines.next().unwrap(), "A_CHECK,pass,1e-10,1e-8,10");
        assert_eq!(lines.count(), 1);
    }

    #[test]
    fn text_columns_align() {
        let text = String::from_utf8(emit_report(&sample(), 7, ReportFormat::Text).unwrap()).unwrap();
        let cols: Vec<_> = text.lines().map(|l| l.find("pass").or_else(|| l.find("finding")).unwrap()).collect();
        assert_eq!(cols[0], cols[1]);
    }
}
