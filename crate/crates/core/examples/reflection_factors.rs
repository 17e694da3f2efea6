//! nu, theta and kappa, and the real-axis classification of nu.
use num_complex::Complex64;
use zetalab::reflect::{classify_nu, conj_ratio, kappa, nu, nu_direct, theta};
use zetalab::EvalConfig;

fn main() -> zetalab::Result<()> {
    let cfg = EvalConfig::default();
    println!("conj_ratio(3, 4) = {}", conj_ratio(3.0, 4.0)?);

    for s in [Complex64::new(0.5, 3.0), Complex64::new(0.5, 22.0), Complex64::new(0.8, 7.0), Complex64::new(2.0, 0.0)] {
        let a = nu(s, &cfg)?.value;
        let b = nu_direct(s, &cfg)?.value;
        println!("nu({s}) = {a:.12}   (direct quotient differs by {:.1e})", (a - b).norm());
    }

    println!("\ntheta(2) = {}", theta(Complex64::new(2.0, 0.0))?.value);
    for s in [Complex64::new(0.75, 0.0), Complex64::new(0.6, 10.0), Complex64::new(0.9, 25.0)] {
        let k = kappa(s, &cfg)?.value;
        println!("kappa({s}) = {k:.10}   |Im| = {:.3e}", k.im.abs());
    }

    let pts: Vec<Complex64> = (-8..=9).map(|x| Complex64::new(x as f64, 0.0)).collect();
    println!("\n   s  kind     |nu| at offsets 1e-2, 1e-3, 1e-4");
    for c in classify_nu(&pts, &cfg) {
        let flag = if c.low_confidence { " (low confidence)" } else { "" };
        println!(
            "{:>4}  {:<8} {:.3e} {:.3e} {:.3e}{flag}",
            c.point.re, c.kind.to_string(), c.probes[0], c.probes[1], c.probes[2]
        );
    }
    Ok(())
}
