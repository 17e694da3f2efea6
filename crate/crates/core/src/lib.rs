//! Numerical laboratory for the Riemann zeta function: region-dispatched
//! evaluation of `zeta` and `eta`, independent integral and product
//! representations, arithmetic-function sieves, reflection factors, zero
//! location, and a registry of reproducible claim checks.
//!
//! ```
//! use num_complex::Complex64;
//! use zetalab::{zeta::zeta, EvalConfig};
//!
//! let z = zeta(Complex64::new(2.0, 0.0), &EvalConfig::default()).unwrap();
//! assert!((z.value.re - std::f64::consts::PI.powi(2) / 6.0).abs() < 1e-12);
//! ```

// `!(x > 0.0)` is used on purpose so that NaN is rejected too.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod arith;
pub mod check;
pub mod cli;
pub mod error;
pub mod harness;
mod quad;
pub mod reflect;
pub mod specfun;
pub mod zeros;
pub mod zeta;

pub use check::{CheckResult, Verdict};
pub use error::{Result, ZetaError};
pub use specfun::{ComplexValue, EvalResult, Method};
pub use zeta::EvalConfig;
