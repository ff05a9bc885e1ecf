//! Taylor coefficients in `tau` of the Series 3 replacement term.
//!
//! Near `s = n + tau` the gamma prefactor and `zeta(1 + tau)` both have a
//! simple pole. With `m = n - 1` and `L = ln(-ln z)`, their sum times
//! `(ln z)^(-m) m!` is analytic at `tau = 0`:
//!
//! `Q_m(L, tau) = sum_j c_{m,j}(L) tau^j`,
//! `c_{m,j} = (-1)^j gamma_j / j! - e_{j+1}`,
//!
//! where `e_k` are the coefficients of `exp(sum_k a_k tau^k)` with
//! `a_1 = L - psi(m + 1)` and, for `k >= 2`,
//! `a_k = -psi^(k-1)(m + 1) / k! + [k even] 2 zeta(k) / k`.

use crate::constants::{harmonic, stieltjes, EULER_GAMMA};
use crate::error::{PolylogError, Result};
use crate::special::polygamma;
use num_complex::Complex64;
use std::f64::consts::PI;

/// Highest supported Taylor order in `tau`.
pub const Q_MAX_ORDER: usize = 4;

const FACTORIAL: [f64; 6] = [1.0, 1.0, 2.0, 6.0, 24.0, 120.0];

/// `c_{m,0..=j_max}(L)` for the Series 3 term at `s = (m + 1) + tau`.
pub fn q_coefficients(m: usize, big_l: Complex64, j_max: usize) -> Result<Vec<Complex64>> {
    if j_max > Q_MAX_ORDER {
        return Err(PolylogError::UnsupportedOrder {
            order: j_max,
            max: Q_MAX_ORDER,
        });
    }
    if !(big_l.re.is_finite() && big_l.im.is_finite()) {
        return Err(PolylogError::NonFinite);
    }
    Ok(q_coefficients_unchecked(m, big_l, j_max))
}

pub(crate) fn q_coefficients_unchecked(m: usize, big_l: Complex64, j_max: usize) -> Vec<Complex64> {
    let x = (m + 1) as f64;
    let digamma = harmonic(m as u64) - EULER_GAMMA;
    // a[0] unused
    let mut a = vec![Complex64::new(0.0, 0.0); j_max + 2];
    a[1] = big_l - digamma;
    for (k, slot) in a.iter_mut().enumerate().skip(2) {
        let psi = polygamma(k - 1, x).expect("order and argument in range");
        let mut v = -psi / FACTORIAL[k];
        if k % 2 == 0 {
            v += 2.0 * even_zeta(k) / k as f64;
        }
        *slot = Complex64::new(v, 0.0);
    }
    let mut e = vec![Complex64::new(0.0, 0.0); j_max + 2];
    e[0] = Complex64::new(1.0, 0.0);
    for i in 1..e.len() {
        let mut acc = Complex64::new(0.0, 0.0);
        for k in 1..=i {
            acc += a[k] * e[i - k] * k as f64;
        }
        e[i] = acc / i as f64;
    }
    (0..=j_max)
        .map(|j| {
            let sign = if j % 2 == 0 { 1.0 } else { -1.0 };
            let g = stieltjes(j).expect("index within table");
            sign * g / FACTORIAL[j] - e[j + 1]
        })
        .collect()
}

fn even_zeta(k: usize) -> f64 {
    match k {
        2 => PI * PI / 6.0,
        4 => PI.powi(4) / 90.0,
        _ => unreachable!("only orders up to four are used"),
    }
}
