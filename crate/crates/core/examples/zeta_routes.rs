//! The same zeta values through every available route.
use num_complex::Complex64;
use zetalab::zeta::{
    eta, eta_integral, euler_product, log_deriv_numeric, log_deriv_zeta, zeta, zeta_floor_integral, zeta_reflect,
};
use zetalab::EvalConfig;

fn main() -> zetalab::Result<()> {
    let cfg = EvalConfig::default();
    for s in [
        Complex64::new(2.0, 0.0),
        Complex64::new(0.5, 14.134725),
        Complex64::new(-1.0, 0.0),
        Complex64::new(0.0, 0.0),
        Complex64::new(-3.5, 12.0),
    ] {
        let z = zeta(s, &cfg)?;
        println!("zeta({s}) = {:.14}  [{}; err {:.1e}]", z.value, z.method, z.abs_err_est);
    }

    let s = Complex64::new(2.5, 3.0);
    println!("\nat s = {s}:");
    println!("  dispatch            {:.12}", zeta(s, &cfg)?.value);
    println!("  fractional integral {:.12}", zeta_floor_integral(s, &cfg)?.value);
    println!("  Euler product p<1e6 {:.12}", euler_product(s, 1_000_000)?.value);
    let r = Complex64::new(1.0, 0.0) - s;
    println!("  reflection of 1-s   {:.12}", zeta_reflect(r, &cfg)?.value);

    let s = Complex64::new(0.7, 5.0);
    println!("\neta({s}): series {:.12}, integral {:.12}", eta(s, &cfg)?.value, eta_integral(s, &cfg)?.value);

    let s = Complex64::new(3.0, 1.0);
    println!(
        "\nzeta'/zeta({s}): Mangoldt series {:.10}, finite difference {:.10}",
        log_deriv_zeta(s, 100_000)?.value,
        log_deriv_numeric(s, 1e-4, &cfg)?
    );

    if let Err(e) = zeta(Complex64::new(1.0, 0.0), &cfg) {
        println!("\nzeta(1): {e}");
    }
    Ok(())
}
