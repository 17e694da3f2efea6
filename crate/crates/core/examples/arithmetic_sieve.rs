//! Sieved arithmetic functions, Dirichlet convolution and the Liouville and
//! sigma series at s = 3.
use num_complex::Complex64;
use zetalab::arith::{build_table, dirichlet_convolve, dirichlet_series, ArithFn, CoeffSeq};
use zetalab::zeta::zeta;
use zetalab::EvalConfig;

fn main() -> zetalab::Result<()> {
    let table = build_table(1_000_000)?;
    println!(" n  mu  Omega  lambda  Lambda     sigma");
    for n in 1..=12 {
        println!(
            "{n:>2} {:>3} {:>6} {:>7} {:>9.5} {:>6}",
            table.mu()[n],
            table.big_omega()[n],
            table.liouville()[n],
            table.mangoldt()[n],
            table.sigma_paper()[n]
        );
    }

    let small = build_table(1000)?;
    let unit = dirichlet_convolve(&CoeffSeq::ones(1000), &small.coeffs(ArithFn::Mu))?;
    let nonzero: Vec<usize> = (1..=1000).filter(|&n| unit.get(n) != 0.0).collect();
    println!("\n(1 * mu)(n) is nonzero only at n in {nonzero:?}");

    let s = Complex64::new(3.0, 0.0);
    let cfg = EvalConfig::default();
    let lam = dirichlet_series(&table.coeffs(ArithFn::Liouville), s)?.result;
    let sig = dirichlet_series(&table.coeffs(ArithFn::Sigma), s)?.result;
    let ratio = zeta(s * 2.0, &cfg)?.value / zeta(s, &cfg)?.value;
    println!("\nsum lambda(n)/n^3 = {:.12}   zeta(6)/zeta(3) = {:.12}", lam.value.re, ratio.re);
    println!("sum sigma(n)/n^3  = {}   zeta(3)/zeta(6) = {:.12}", sig.value.re, 1.0 / ratio.re);
    println!("product           = {:.12}", (lam.value * sig.value).re);
    Ok(())
}
