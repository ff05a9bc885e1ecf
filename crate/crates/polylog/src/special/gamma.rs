//! Complex gamma function via Stirling's series with upward recurrence,
//! and reflection for `Re(s) < 1/2`.

use super::trig::sin_pi;
use crate::constants::bernoulli_rational;
use crate::error::{PolylogError, Result};
use num_complex::Complex64;
use std::f64::consts::PI;
use std::sync::OnceLock;

/// Real part threshold above which Stirling's series is used directly.
const STIRLING_MIN_RE: f64 = 10.0;
const STIRLING_TERMS: usize = 14;
const HALF_LN_TWO_PI: f64 = 0.918_938_533_204_672_741_780_329_736_406;

/// `B_{2k} / (2k (2k - 1))`, k = 1..
fn stirling_coefficients() -> &'static [f64; STIRLING_TERMS] {
    static TABLE: OnceLock<[f64; STIRLING_TERMS]> = OnceLock::new();
    TABLE.get_or_init(|| {
        let mut out = [0.0; STIRLING_TERMS];
        for (i, slot) in out.iter_mut().enumerate() {
            let k = 2 * (i + 1);
            let (p, q) = bernoulli_rational(k);
            *slot = p as f64 / (q as f64 * (k * (k - 1)) as f64);
        }
        out
    })
}

/// Stirling series for `ln Gamma(w)`, valid for `Re(w) >= STIRLING_MIN_RE`.
fn stirling(w: Complex64) -> Complex64 {
    let inv = w.inv();
    let inv2 = inv * inv;
    let mut pow = inv;
    let mut series = Complex64::new(0.0, 0.0);
    for &c in stirling_coefficients() {
        let t = pow * c;
        series += t;
        if t.norm() < 1e-18 * series.norm() {
            break;
        }
        pow *= inv2;
    }
    (w - 0.5) * w.ln() - w + HALF_LN_TWO_PI + series
}

/// Number of unit shifts that move `w` into the Stirling region, and the
/// product `w (w + 1) ... (w + n - 1)`.
fn shift(w: Complex64) -> (Complex64, Complex64) {
    let mut prod = Complex64::new(1.0, 0.0);
    let mut w = w;
    while w.re < STIRLING_MIN_RE {
        prod *= w;
        w += 1.0;
    }
    (w, prod)
}

/// `ln Gamma(w)`, with the imaginary part defined only modulo `2 pi`.
/// Intended for products that are exponentiated afterwards.
pub(crate) fn ln_gamma(w: Complex64) -> Complex64 {
    if w.re < 0.5 {
        let refl = Complex64::new(PI.ln(), 0.0) - sin_pi(w).ln();
        return refl - ln_gamma(Complex64::new(1.0, 0.0) - w);
    }
    let (shifted, prod) = shift(w);
    stirling(shifted) - prod.ln()
}

fn is_pole(s: Complex64) -> bool {
    if s.im != 0.0 || s.re > 0.0 {
        return false;
    }
    let n = s.re.round();
    (s.re - n).abs() <= f64::EPSILON * n.abs().max(1.0)
}

/// Gamma function for complex argument.
///
/// Relative error is around `|ln Gamma(s)| * 2^-52`, i.e. better than
/// `1e-13` for `|s| <= 200`. Non-positive integers are poles.
pub fn complex_gamma(s: Complex64) -> Result<Complex64> {
    if !s.re.is_finite() || !s.im.is_finite() {
        return Err(PolylogError::NonFinite);
    }
    if is_pole(s) {
        return Err(PolylogError::GammaPole(s.re.round()));
    }
    Ok(gamma_unchecked(s))
}

pub(crate) fn gamma_unchecked(s: Complex64) -> Complex64 {
    if s.re < 0.5 {
        let one_minus = Complex64::new(1.0, 0.0) - s;
        return PI / (sin_pi(s) * gamma_unchecked(one_minus));
    }
    let (shifted, prod) = shift(s);
    stirling(shifted).exp() / prod
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rel(a: Complex64, b: Complex64) -> f64 {
        (a - b).norm() / b.norm()
    }

    #[test]
    fn special_values() {
        let one = complex_gamma(Complex64::new(1.0, 0.0)).unwrap();
        assert!(rel(one, Complex64::new(1.0, 0.0)) < 4e-15);
        let half = complex_gamma(Complex64::new(0.5, 0.0)).unwrap();
        assert!(rel(half, Complex64::new(PI.sqrt(), 0.0)) < 4e-15);
        let g = complex_gamma(Complex64::new(1.0, 1.0)).unwrap();
        let expected = Complex64::new(0.49801566811835607, -0.15494982830181069);
        assert!(rel(g, expected) < 1e-14);
    }

    #[test]
    fn factorials() {
        let mut f = 1.0;
        for n in 1..30 {
            let g = complex_gamma(Complex64::new(n as f64, 0.0)).unwrap();
            assert!((g.re / f - 1.0).abs() < 1e-14, "n = {n}");
            assert_eq!(g.im, 0.0);
            f *= n as f64;
        }
    }

    #[test]
    fn poles_are_errors() {
        for n in [0.0, -1.0, -7.0, -50.0] {
            assert!(matches!(
                complex_gamma(Complex64::new(n, 0.0)),
                Err(PolylogError::GammaPole(_))
            ));
        }
        assert!(complex_gamma(Complex64::new(-1.0, 1e-9)).is_ok());
        assert!(complex_gamma(Complex64::new(f64::NAN, 0.0)).is_err());
    }

    #[test]
    fn reflection_matches_recurrence() {
        // Gamma(s) = Gamma(s + 1) / s across the reflection boundary.
        for &(re, im) in &[(0.3, 0.2), (-2.7, 1.5), (-0.2, -3.0), (0.49, 0.0)] {
            let s = Complex64::new(re, im);
            let a = complex_gamma(s).unwrap();
            let b = complex_gamma(s + 1.0).unwrap() / s;
            assert!(rel(a, b) < 1e-14, "s = {s}");
        }
    }

    #[test]
    fn ln_gamma_exponentiates_to_gamma() {
        for &(re, im) in &[(3.3, -4.0), (-5.5, 2.0), (0.7, 30.0)] {
            let s = Complex64::new(re, im);
            let a = ln_gamma(s).exp();
            let b = complex_gamma(s).unwrap();
            assert!(rel(a, b) < 1e-13, "s = {s}");
        }
    }
}
