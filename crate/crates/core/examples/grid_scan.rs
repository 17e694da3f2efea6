//! |kappa| over part of the strip, written as re,im,value CSV to stdout.
use zetalab::harness::{grid_scan, write_scan_csv, Quantity};
use zetalab::zeros::Rect;
use zetalab::EvalConfig;

fn main() -> zetalab::Result<()> {
    let region = Rect::new(0.55, 0.95, 0.0, 5.0)?;
    let cells = grid_scan(&region, 0.1, Quantity::AbsKappa, &EvalConfig::default())?;
    write_scan_csv(&cells, std::io::stdout().lock())
}
