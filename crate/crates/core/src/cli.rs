//! Command-line front end for the `zetalab` binary.

use std::fs::File;
use std::io::{self, Write};
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use num_complex::Complex64;

use crate::arith::{build_table, ArithFn};
use crate::error::{Result, ZetaError};
use crate::harness::{self, emit_report, grid_scan, write_scan_csv, Quantity, ReportFormat, RunConfig};
use crate::reflect::{kappa, nu, theta};
use crate::zeros::{find_critical_zeros, write_zeros_csv, Rect};
use crate::zeta::{eta, zeta, EvalConfig};

#[derive(Debug, Parser)]
#[command(name = "zetalab", version, about = "Zeta, eta and reflection-factor evaluation with claim checks")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum EvalFn {
    Zeta,
    Eta,
    Nu,
    Theta,
    Kappa,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum SieveFn {
    Mu,
    Lambda,
    Mangoldt,
    Sigma,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum TableFormat {
    Csv,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum ReportArg {
    Json,
    Csv,
    Text,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum QuantityArg {
    #[value(name = "abs_zeta")]
    AbsZeta,
    #[value(name = "abs_eta")]
    AbsEta,
    #[value(name = "abs_kappa")]
    AbsKappa,
    #[value(name = "im_kappa")]
    ImKappa,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate one function at re + i im.
    Eval {
        #[arg(allow_hyphen_values = true)]
        re: f64,
        #[arg(allow_hyphen_values = true)]
        im: f64,
        #[arg(long = "fn", value_enum, default_value = "zeta")]
        function: EvalFn,
    },
    /// Sieve an arithmetic function on 1..=N and print it as CSV.
    Sieve {
        n: usize,
        #[arg(long = "fn", value_enum)]
        function: SieveFn,
        #[arg(long, value_enum, default_value = "csv")]
        out: TableFormat,
        /// Write to this file instead of stdout.
        #[arg(long)]
        file: Option<PathBuf>,
    },
    /// Run registered checks and print a report; exits 1 if any check fails.
    Verify {
        /// Comma-separated check ids.
        #[arg(long, value_delimiter = ',')]
        only: Vec<String>,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long, value_enum, default_value = "text")]
        report: ReportArg,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Tolerance override, ID=VALUE; may be repeated.
        #[arg(long = "tol")]
        tolerances: Vec<String>,
        /// List the registered checks and exit.
        #[arg(long)]
        list: bool,
    },
    /// Evaluate a quantity on a grid and print re,im,value CSV.
    Scan {
        /// re_min,re_max,im_min,im_max
        #[arg(long, allow_hyphen_values = true)]
        rect: String,
        #[arg(long)]
        step: f64,
        #[arg(long, value_enum)]
        quantity: QuantityArg,
        #[arg(long, value_enum, default_value = "csv")]
        out: TableFormat,
        #[arg(long)]
        file: Option<PathBuf>,
    },
    /// Locate zeros on the critical line and print them as CSV.
    Zeros {
        #[arg(long)]
        tmin: f64,
        #[arg(long)]
        tmax: f64,
        #[arg(long, default_value_t = 0.01)]
        step: f64,
        #[arg(long, value_enum, default_value = "csv")]
        out: TableFormat,
        #[arg(long)]
        file: Option<PathBuf>,
    },
}

fn sink(file: &Option<PathBuf>) -> Result<Box<dyn Write>> {
    Ok(match file {
        Some(p) => Box::new(File::create(p)?),
        None => Box::new(io::stdout().lock()),
    })
}

fn format_complex(z: Complex64) -> String {
    let sign = if z.im.is_sign_negative() { '-' } else { '+' };
    format!("{} {} {}i", z.re, sign, z.im.abs())
}

/// Execute a parsed command and return the process exit code.
pub fn run(cli: Cli) -> Result<i32> {
    let eval_cfg = EvalConfig::default();
    match cli.command {
        Command::Eval { re, im, function } => {
            let s = Complex64::new(re, im);
            let (name, r) = match function {
                EvalFn::Zeta => ("zeta", zeta(s, &eval_cfg)?),
                EvalFn::Eta => ("eta", eta(s, &eval_cfg)?),
                EvalFn::Nu => ("nu", nu(s, &eval_cfg)?),
                EvalFn::Theta => ("theta", theta(s)?),
                EvalFn::Kappa => ("kappa", kappa(s, &eval_cfg)?),
            };
            println!(
                "{name}({}) = {}  abs_err_est {:.3e}  method {}",
                format_complex(s),
                format_complex(r.value),
                r.abs_err_est,
                r.method
            );
            Ok(0)
        }
        Command::Sieve { n, function, out: _, file } => {
            let table = build_table(n)?;
            let which = match function {
                SieveFn::Mu => ArithFn::Mu,
                SieveFn::Lambda => ArithFn::Liouville,
                SieveFn::Mangoldt => ArithFn::Mangoldt,
                SieveFn::Sigma => ArithFn::Sigma,
            };
            table.write_csv(which, sink(&file)?)?;
            Ok(0)
        }
        Command::Verify { only, seed, report, out, tolerances, list } => {
            if list {
                for c in harness::registry() {
                    let class = if c.finding { "finding" } else { "check" };
                    println!("{:<20} {:<8} tol {:<8.1e} {}", c.id, class, c.tolerance, c.claim);
                }
                return Ok(0);
            }
            let mut cfg = RunConfig::from_env()?;
            if let Some(s) = seed {
                cfg.seed = s;
            }
            for t in &tolerances {
                let (id, v) = t
                    .split_once('=')
                    .ok_or_else(|| ZetaError::EvaluationFailure(format!("--tol expects ID=VALUE, got `{t}`")))?;
                harness::check_spec(id)?;
                let v: f64 = v
                    .parse()
                    .map_err(|_| ZetaError::EvaluationFailure(format!("bad tolerance `{v}`")))?;
                cfg.tolerance_overrides.insert(id.to_string(), v);
            }
            cfg.output = out;
            let results = harness::run_selected(&only, &cfg)?;
            let format = match report {
                ReportArg::Json => ReportFormat::Json,
                ReportArg::Csv => ReportFormat::Csv,
                ReportArg::Text => ReportFormat::Text,
            };
            let bytes = emit_report(&results, cfg.seed, format)?;
            sink(&cfg.output)?.write_all(&bytes)?;
            let (pass, fail, finding) = harness::tally(&results);
            eprintln!("{pass} passed, {fail} failed, {finding} findings (seed {})", cfg.seed);
            Ok(harness::exit_code(&results))
        }
        Command::Scan { rect, step, quantity, out: _, file } => {
            let bad = || ZetaError::InvalidRect(format!("--rect expects four comma-separated numbers, got {rect:?}"));
            let nums = rect
                .split(',')
                .map(|x| x.trim().parse::<f64>())
                .collect::<std::result::Result<Vec<_>, _>>()
                .map_err(|_| bad())?;
            let [a, b, c, d]: [f64; 4] = nums.try_into().map_err(|_| bad())?;
            let region = if a == b && c == d { Rect::point(Complex64::new(a, c)) } else { Rect::new(a, b, c, d)? };
            let q = match quantity {
                QuantityArg::AbsZeta => Quantity::AbsZeta,
                QuantityArg::AbsEta => Quantity::AbsEta,
                QuantityArg::AbsKappa => Quantity::AbsKappa,
                QuantityArg::ImKappa => Quantity::ImKappa,
            };
            let cells = grid_scan(&region, step, q, &eval_cfg)?;
            write_scan_csv(&cells, sink(&file)?)?;
            Ok(0)
        }
        Command::Zeros { tmin, tmax, step, out: _, file } => {
            let zeros = find_critical_zeros(tmin, tmax, step, &eval_cfg)?;
            write_zeros_csv(&zeros, sink(&file)?)?;
            Ok(0)
        }
    }
}

/// Parse arguments, run, and map errors to exit code 2.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            2
        }
    }
}
