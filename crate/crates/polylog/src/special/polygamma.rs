use crate::constants::bernoulli_rational;
use crate::error::{PolylogError, Result};

pub const POLYGAMMA_MAX_ORDER: usize = 4;

const ASYMPTOTIC_MIN_X: f64 = 20.0;
const ASYMPTOTIC_TERMS: usize = 12;

const FACTORIAL: [f64; 6] = [1.0, 1.0, 2.0, 6.0, 24.0, 120.0];

/// Polygamma `psi^(m)(x)` for `0 <= m <= 4` and real `x > 0`; `m = 0` is digamma.
///
/// The argument is pushed up by the recurrence
/// `psi^(m)(x) = psi^(m)(x + 1) + (-1)^(m+1) m! / x^(m+1)` until the
/// asymptotic expansion is accurate.
pub fn polygamma(m: usize, x: f64) -> Result<f64> {
    if m > POLYGAMMA_MAX_ORDER {
        return Err(PolylogError::UnsupportedOrder {
            order: m,
            max: POLYGAMMA_MAX_ORDER,
        });
    }
    if x.is_nan() || x <= 0.0 {
        return Err(PolylogError::Domain("polygamma requires x > 0"));
    }
    if x.is_infinite() {
        return Ok(if m == 0 { f64::INFINITY } else { 0.0 });
    }
    let sign = if m.is_multiple_of(2) { -1.0 } else { 1.0 };
    let fact = FACTORIAL[m];
    let mut x = x;
    let mut shift_sum = 0.0;
    while x < ASYMPTOTIC_MIN_X {
        shift_sum += x.powi(-(m as i32 + 1));
        x += 1.0;
    }
    Ok(asymptotic(m, x) + sign * fact * shift_sum)
}

fn asymptotic(m: usize, x: f64) -> f64 {
    let inv = 1.0 / x;
    let inv2 = inv * inv;
    if m == 0 {
        let mut series = 0.0;
        let mut pow = inv2;
        for k in 1..=ASYMPTOTIC_TERMS {
            let (p, q) = bernoulli_rational(2 * k);
            series += p as f64 / q as f64 / (2 * k) as f64 * pow;
            pow *= inv2;
        }
        return x.ln() - 0.5 * inv - series;
    }
    let sign = if m % 2 == 1 { 1.0 } else { -1.0 };
    let mf = m as f64;
    let lead = FACTORIAL[m - 1] * inv.powi(m as i32) + 0.5 * FACTORIAL[m] * inv.powi(m as i32 + 1);
    // B_{2k} (2k + m - 1)! / (2k)! / x^(2k + m)
    let mut series = 0.0;
    let mut pow = inv.powi(m as i32) * inv2;
    let mut ratio = 1.0; // (2k + m - 1)! / (2k)!
    for j in 1..m {
        ratio *= j as f64;
    }
    for k in 1..=ASYMPTOTIC_TERMS {
        let n = 2 * k;
        // update ratio from (2k - 2 + m - 1)!/(2k - 2)! to (2k + m - 1)!/(2k)!
        ratio *= ((n as f64 + mf - 2.0) * (n as f64 + mf - 1.0)) / ((n - 1) as f64 * n as f64);
        let (p, q) = bernoulli_rational(n);
        series += p as f64 / q as f64 * ratio * pow;
        pow *= inv2;
    }
    sign * (lead + series)
}
