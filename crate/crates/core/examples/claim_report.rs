//! Run the claim registry and print the text report; pass a seed as the
//! first argument to change the sampled points.
use zetalab::harness::{emit_report, run_all, tally, ReportFormat, RunConfig};

fn main() -> zetalab::Result<()> {
    let mut cfg = RunConfig::from_env()?;
    if let Some(seed) = std::env::args().nth(1) {
        cfg.seed = seed.parse().expect("seed must be an unsigned integer");
    }
    let results = run_all(&cfg);
    let text = emit_report(&results, cfg.seed, ReportFormat::Text)?;
    print!("{}", String::from_utf8_lossy(&text));
    let (pass, fail, finding) = tally(&results);
    println!("\n{pass} passed, {fail} failed, {finding} findings");
    Ok(())
}
