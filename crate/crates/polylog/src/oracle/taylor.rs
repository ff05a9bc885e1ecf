//! Contour-integral Taylor coefficients of the Series 3 replacement term.

use super::complex::ExtendedComplex;
use super::dd::ExtendedReal;
use super::functions::{contour_coefficients, oracle_gamma, oracle_zeta};
use crate::error::{PolylogError, Result};
use num_complex::Complex64;

pub const TAYLOR_ORACLE_MAX_ORDER: usize = 6;
const NODES: usize = 64;
const RADIUS: f64 = 0.1;

/// Taylor coefficients at `tau = 0` of
/// `G(tau) = zeta(1 + tau) + (-1)^n n! Gamma(-n - tau) e^(tau L)`,
/// by the trapezoid rule on `|tau| = 0.1` with 64 nodes.
pub fn taylor_coefficients_oracle(
    n: usize,
    big_l: Complex64,
    j_max: usize,
) -> Result<Vec<ExtendedComplex>> {
    if j_max > TAYLOR_ORACLE_MAX_ORDER {
        return Err(PolylogError::UnsupportedOrder {
            order: j_max,
            max: TAYLOR_ORACLE_MAX_ORDER,
        });
    }
    if !(big_l.re.is_finite() && big_l.im.is_finite()) {
        return Err(PolylogError::NonFinite);
    }
    let l = ExtendedComplex::from(big_l);
    let mut n_fact = ExtendedReal::ONE;
    for i in 2..=n {
        n_fact = n_fact * i as f64;
    }
    if n % 2 == 1 {
        n_fact = -n_fact;
    }
    let neg_n = ExtendedComplex::from(-(n as f64));
    contour_coefficients(NODES, ExtendedReal::from(RADIUS), j_max, |tau| {
        let zeta = oracle_zeta(tau + 1.0)?;
        let gamma = oracle_gamma(neg_n - tau)?;
        Ok(zeta + gamma * (tau * l).exp() * n_fact)
    })
}
