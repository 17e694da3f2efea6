use std::io::Write;

use num_complex::Complex64;
use rayon::prelude::*;

use crate::error::{Result, ZetaError};
use crate::reflect::kappa;
use crate::zeros::Rect;
use crate::zeta::{eta, zeta, EvalConfig};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Quantity {
    AbsZeta,
    AbsEta,
    AbsKappa,
    ImKappa,
}

impl std::str::FromStr for Quantity {
    type Err = ZetaError;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "abs_zeta" => Ok(Self::AbsZeta),
            "abs_eta" => Ok(Self::AbsEta),
            "abs_kappa" => Ok(Self::AbsKappa),
            "im_kappa" => Ok(Self::ImKappa),
            other => Err(ZetaError::EvaluationFailure(format!("unknown scan quantity `{other}`"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ScanCell {
    pub re: f64,
    pub im: f64,
    pub value: Option<f64>,
    /// The evaluator error when `value` is empty.
    pub note: Option<String>,
}

fn axis(lo: f64, hi: f64, step: f64) -> Vec<f64> {
    let n = ((hi - lo) / step + 1e-9).floor() as usize;
    // snap to 12 decimals so that 0.1 * 3 prints as 0.3
    (0..=n).map(|k| ((lo + k as f64 * step) * 1e12).round() / 1e12).collect()
}

fn evaluate(q: Quantity, s: Complex64, cfg: &EvalConfig) -> Result<f64> {
    Ok(match q {
        Quantity::AbsZeta => zeta(s, cfg)?.value.norm(),
        Quantity::AbsEta => eta(s, cfg)?.value.norm(),
        Quantity::AbsKappa => kappa(s, cfg)?.value.norm(),
        Quantity::ImKappa => kappa(s, cfg)?.value.im,
    })
}

/// Evaluate `quantity` on the lattice `re_min + i step`, `im_min + j step`
/// inside `region` (a single point for a degenerate region), row-major in
/// `re`. Evaluation errors leave the cell empty.
pub fn grid_scan(region: &Rect, step: f64, quantity: Quantity, cfg: &EvalConfig) -> Result<Vec<ScanCell>> {
    if !(step > 0.0) || !(region.re_min <= region.re_max && region.im_min <= region.im_max) {
        return Err(ZetaError::InvalidRect(format!("scan over {region:?} with step {step}")));
    }
    let res = axis(region.re_min, region.re_max, step);
    let ims = axis(region.im_min, region.im_max, step);
    let pts: Vec<(f64, f64)> = res.iter().flat_map(|&r| ims.iter().map(move |&i| (r, i))).collect();
    Ok(pts
        .par_iter()
        .map(|&(re, im)| match evaluate(quantity, Complex64::new(re, im), cfg) {
            Ok(v) => ScanCell { re, im, value: Some(v), note: None },
            Err(e) => ScanCell { re, im, value: None, note: Some(e.to_string()) },
        })
        .collect())
}

/// CSV with header `re,im,value`; failed cells have an empty value.
pub fn write_scan_csv<W: Write>(cells: &[ScanCell], out: W) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    let io = |e: csv::Error| ZetaError::Io(e.to_string());
    w.write_record(["re", "im", "value"]).map_err(io)?;
    for c in cells {
        let v = c.value.map(|v| format!("{v:e}")).unwrap_or_default();
        w.write_record([c.re.to_string(), c.im.to_string(), v]).map_err(io)?;
    }
    w.flush()?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_point_scan() {
        let cfg = EvalConfig::default();
        let cells = grid_scan(&Rect::point(Complex64::new(2.0, 0.0)), 0.1, Quantity::AbsZeta, &cfg).unwrap();
        assert_eq!(cells.len(), 1);
        let v = cells[0].value.unwrap();
        assert!((v - std::f64::consts::PI.powi(2) / 6.0).abs() < 1e-12);
    }

    #[test]
    fn pole_cell_is_empty() {
        let cfg = EvalConfig::default();
        let r = Rect::new(0.5, 1.5, -0.5, 0.5).unwrap();
        let cells = grid_scan(&r, 0.5, Quantity::AbsZeta, &cfg).unwrap();
        assert_eq!(cells.len(), 9);
        let pole = cells.iter().find(|c| c.re == 1.0 && c.im == 0.0).unwrap();
        assert!(pole.value.is_none() && pole.note.is_some());
        assert_eq!(cells.iter().filter(|c| c.value.is_some()).count(), 8);
        let mut buf = Vec::new();
        write_scan_csv(&cells, &mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        assert!(text.starts_with("re,im,value\n"));
        assert!(text.contains("\n1,0,\n"));
    }

    #[test]
    fn bad_step() {
        let cfg = EvalConfig::default();
        let r = Rect::new(0.5, 1.5, -0.5, 0.5).unwrap();
        assert!(grid_scan(&r, 0.0, Quantity::AbsZeta, &cfg).is_err());
        assert!("nope".parse::<Quantity>().is_err());
    }
}
