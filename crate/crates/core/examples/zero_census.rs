//! Critical-line zeros below t = 40, winding counts and multiplicities.
use num_complex::Complex64;
use zetalab::zeros::{count_zeros_rect, find_critical_zeros, multiplicity, Rect};
use zetalab::zeta::zeta;
use zetalab::EvalConfig;

fn main() -> zetalab::Result<()> {
    let cfg = EvalConfig::default();
    let zeros = find_critical_zeros(1.0, 40.0, 0.01, &cfg)?;
    println!("{:>12}  {:>9}  {:>12}  method", "t", "|eta|", "multiplicity");
    for z in &zeros {
        println!(
            "{:>12.6}  {:>9.1e}  {:>12.4}  {}",
            z.location.im,
            z.refined_abs_value,
            z.multiplicity_estimate,
            z.method.as_str()
        );
    }

    for t in [12.0, 20.0, 30.0, 40.0] {
        let n = count_zeros_rect(&Rect::new(0.0, 1.0, 0.0, t)?, 64, &cfg)?;
        println!("zeros in [0,1] x [0,{t}]: {n}");
    }
    let around_pole = count_zeros_rect(&Rect::new(0.5, 1.5, -0.5, 0.5)?, 64, &cfg)?;
    println!("zeros minus poles around s = 1: {around_pole}");

    let f = |s: Complex64| zeta(s, &cfg).map(|r| r.value);
    for a in [1.0, 2.0, -2.0, -4.0] {
        let m = multiplicity(f, Complex64::new(a, 0.0), 1e-4)?;
        println!("w(zeta, {a}) = {:.5}", m.value);
    }
    Ok(())
}
