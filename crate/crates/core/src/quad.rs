//! Globally adaptive Gauss-Kronrod (7/15) quadrature for complex integrands.

use num_complex::Complex64;

use crate::error::{Result, ZetaError};

const XGK: [f64; 8] = [
    0.991_455_371_120_812_6,
    0.949_107_912_342_758_5,
    0.864_864_423_359_769_1,
    0.741_531_185_599_394_4,
    0.586_087_235_467_691_1,
    0.405_845_151_377_397_2,
    0.207_784_955_007_898_5,
    0.0,
];
const WGK: [f64; 8] = [
    0.022_935_322_010_529_22,
    0.063_092_092_629_978_55,
    0.104_790_010_322_250_2,
    0.140_653_259_715_525_9,
    0.169_004_726_639_267_9,
    0.190_350_578_064_785_4,
    0.204_432_940_075_298_9,
    0.209_482_141_084_728_8,
];
const WG: [f64; 4] = [
    0.129_484_966_168_869_7,
    0.279_705_391_489_276_7,
    0.381_830_050_505_118_9,
    0.417_959_183_673_469_4,
];

#[derive(Debug, Clone, Copy)]
pub(crate) struct Panel {
    a: f64,
    b: f64,
    value: Complex64,
    err: f64,
}

/// One 15-point Kronrod panel with the embedded 7-point Gauss estimate.
pub(crate) fn gk15<F>(f: &F, a: f64, b: f64) -> (Complex64, f64)
where
    F: Fn(f64) -> Complex64,
{
    let c = 0.5 * (a + b);
    let h = 0.5 * (b - a);
    let fc = f(c);
    let mut kron = fc * WGK[7];
    let mut gauss = fc * WG[3];
    for j in 0..7 {
        let x = h * XGK[j];
        let pair = f(c - x) + f(c + x);
        kron += pair * WGK[j];
        if j % 2 == 1 {
            gauss += pair * WG[j / 2];
        }
    }
    let value = kron * h;
    let err = ((kron - gauss) * h).norm();
    (value, err)
}

/// Integrate `f` over `[a, b]` to absolute tolerance `tol`, bisecting the
/// panel with the largest error estimate until the summed estimate falls
/// below `tol` or `max_panels` is exhausted.
pub(crate) fn integrate<F>(f: F, a: f64, b: f64, tol: f64, max_panels: usize) -> Result<(Complex64, f64)>
where
    F: Fn(f64) -> Complex64,
{
    let (v, e) = gk15(&f, a, b);
    let mut panels = vec![Panel { a, b, value: v, err: e }];
    let mut total_err = e;
    while total_err > tol {
        if panels.len() >= max_panels {
            return Err(ZetaError::QuadratureFailure {
                tol,
                estimate: total_err,
                evals: panels.len(),
            });
        }
        let (idx, worst) = panels
            .iter()
            .enumerate()
            .max_by(|x, y| x.1.err.total_cmp(&y.1.err))
            .map(|(i, p)| (i, *p))
            .expect("non-empty");
        let mid = 0.5 * (worst.a + worst.b);
        let (lv, le) = gk15(&f, worst.a, mid);
        let (rv, re) = gk15(&f, mid, worst.b);
        panels[idx] = Panel { a: worst.a, b: mid, value: lv, err: le };
        panels.push(Panel { a: mid, b: worst.b, value: rv, err: re });
        total_err = panels.iter().map(|p| p.err).sum();
    }
    let value = panels.iter().fold(Complex64::new(0.0, 0.0), |acc, p| acc + p.value);
    Ok((value, total_err))
}
