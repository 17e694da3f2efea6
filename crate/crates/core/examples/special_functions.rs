//! Gamma, 1/Gamma and the reflection factor xi(s) at a few points.
use num_complex::Complex64;
use zetalab::specfun::{gamma, half_cos, recip_gamma_euler, xi_factor};

fn main() -> zetalab::Result<()> {
    for s in [Complex64::new(0.5, 0.0), Complex64::new(5.0, 0.0), Complex64::new(0.5, 14.0), Complex64::new(-2.5, 1.0)] {
        let g = gamma(s)?;
        println!("Gamma({s}) = {:.15}  (err <= {:.1e})", g.value, g.abs_err_est);
    }

    // The Weierstrass product converges slowly; watch the error shrink.
    let s = Complex64::new(0.3, 2.0);
    let exact = gamma(s)?.value.inv();
    for terms in [1_000, 10_000, 100_000] {
        let r = recip_gamma_euler(s, terms);
        println!("1/Gamma({s}) with {terms:>6} factors: |error| = {:.2e}", (r.value - exact).norm());
    }

    println!("cos(pi s/2) at s = 0.5 + 2i: {:.12}", half_cos(Complex64::new(0.5, 2.0))?);
    for x in [2.0, 3.0, 0.5] {
        println!("xi({x}) = {}", xi_factor(Complex64::new(x, 0.0))?.value);
    }
    match gamma(Complex64::new(-3.0, 0.0)) {
        Ok(_) => unreachable!(),
        Err(e) => println!("Gamma(-3): {e}"),
    }
    Ok(())
}
