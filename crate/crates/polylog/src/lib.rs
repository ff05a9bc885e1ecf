//! Polylogarithm `Li_s(z)` for complex parameter `s` and complex argument `z`
//! in IEEE-754 double precision.
//!
//! The evaluator picks between three series (the defining sum, an expansion
//! about `z = 1` in powers of `ln z`, and its pole-cancelled variant near
//! positive integer `s`) and falls back to the duplication identity for large
//! `|z|`. Default relative accuracy goal is `1e-12`.
//!
//! ```
//! use polylog::{li, Complex64};
//!
//! // Li_2(1/2) = pi^2/12 - ln(2)^2/2
//! let v = li(Complex64::new(2.0, 0.0), Complex64::new(0.5, 0.0)).unwrap();
//! let exact = std::f64::consts::PI.powi(2) / 12.0 - std::f64::consts::LN_2.powi(2) / 2.0;
//! assert!((v.re - exact).abs() < 1e-14);
//! ```
//!
//! Modules:
//!
//! * [`constants`]: Stieltjes constants, harmonic numbers, Bernoulli numbers and polynomials.
//! * [`special`]: gamma, polygamma, Riemann/Hurwitz zeta, Dirichlet eta and beta.
//! * [`engine`]: the polylogarithm evaluator and its series.
//! * [`oracle`]: double-double reference implementations used for validation.

pub mod constants;
pub mod engine;
mod error;
pub mod oracle;
pub mod special;

pub use num_complex::Complex64;

/// Complex double-precision value used throughout the crate.
pub type ComplexValue = Complex64;

pub use engine::{
    crandall_theta, duplication_step, li, polylog, q_coefficients, select_method, series1, series2,
    series3, EvaluationConfig, EvaluationResult, MethodTag,
};
pub use error::{PolylogError, Result};
