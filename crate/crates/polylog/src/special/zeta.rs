//! Riemann and Hurwitz zeta, Dirichlet eta and beta.

use super::gamma::ln_gamma;
use super::trig::{cos_pi, expm1, sin_pi};
use crate::constants::{bernoulli_poly, euler_maclaurin_coefficients, BERNOULLI_EXACT_MAX};
use crate::error::{PolylogError, Result};
use num_complex::Complex64;
use std::f64::consts::{LN_2, PI};

const LN_TWO_PI: f64 = 1.837_877_066_409_345_483_560_659_472_811;
const LN_PI: f64 = 1.144_729_885_849_400_174_143_427_351_353;

/// Euler–Maclaurin evaluation of `sum_{n >= 0} (n + q)^-s`, analytically
/// continued. Accurate when `Re(s)` is not very negative.
pub(crate) fn euler_maclaurin(s: Complex64, q: f64) -> Complex64 {
    let coeffs = euler_maclaurin_coefficients();
    let sigma = s.re;
    let mut n = (s.norm() / 2.0).ceil() + 10.0;
    if sigma > 2.0 {
        // tail of the direct sum is about N^(1 - sigma) / (sigma - 1)
        let direct = (1e17 / (sigma - 1.0)).powf(1.0 / (sigma - 1.0)).ceil();
        n = n.min(direct);
    }
    let mut n = n.max(3.0) as usize;
    let s_minus_1 = s - 1.0;
    loop {
        let mut direct = Complex64::new(0.0, 0.0);
        for j in (0..n).rev() {
            direct += (-s * (j as f64 + q).ln()).exp();
        }
        let a = n as f64 + q;
        let ln_a = a.ln();
        let a_pow = (-s * ln_a).exp();
        let mut total = direct + a_pow * a / s_minus_1 + a_pow * 0.5;

        let inv_a2 = 1.0 / (a * a);
        let mut rising = s;
        let mut factor = a_pow / a;
        let mut prev = f64::INFINITY;
        let mut converged = false;
        for (k, &c) in coeffs.iter().enumerate() {
            let t = rising * factor * c;
            let mag = t.norm();
            total += t;
            if mag <= 1e-17 * total.norm() || mag == 0.0 {
                converged = true;
                break;
            }
            if mag > prev {
                break;
            }
            prev = mag;
            let k2 = 2.0 * (k + 1) as f64;
            rising *= (s + (k2 - 1.0)) * (s + k2);
            factor *= inv_a2;
        }
        if converged || n > 1 << 16 {
            return total;
        }
        n *= 2;
    }
}

fn is_one(s: Complex64) -> bool {
    s.im == 0.0 && (s.re - 1.0).abs() <= f64::EPSILON
}

/// Riemann zeta function for complex `s != 1`.
///
/// Euler–Maclaurin summation for `Re(s) >= 1/2`; the functional equation
/// `zeta(s) = 2^s pi^(s-1) sin(pi s / 2) Gamma(1 - s) zeta(1 - s)` otherwise.
/// Relative error is below `1e-13` for `|Im s| <= 40`, `-60 <= Re s <= 60`
/// (away from the nontrivial zeros, where only absolute accuracy is meaningful).
pub fn riemann_zeta(s: Complex64) -> Result<Complex64> {
    if !s.re.is_finite() || !s.im.is_finite() {
        return Err(PolylogError::NonFinite);
    }
    if is_one(s) {
        return Err(PolylogError::ZetaPole);
    }
    Ok(zeta_unchecked(s))
}

pub(crate) fn zeta_unchecked(s: Complex64) -> Complex64 {
    if s.re >= 0.5 {
        return euler_maclaurin(s, 1.0);
    }
    if s.re == 0.0 && s.im == 0.0 {
        return Complex64::new(-0.5, 0.0);
    }
    let w = Complex64::new(1.0, 0.0) - s;
    let log_factor = s * LN_TWO_PI - LN_PI + ln_gamma(w);
    let sine = sin_pi(s * 0.5);
    if sine == Complex64::new(0.0, 0.0) {
        return sine;
    }
    if s.im == 0.0 {
        let magnitude = log_factor.re.exp() * sine.re;
        return Complex64::new(magnitude * euler_maclaurin(w, 1.0).re, 0.0);
    }
    log_factor.exp() * sine * euler_maclaurin(w, 1.0)
}

/// Hurwitz zeta `zeta(s, q) = sum_{n >= 0} (n + q)^-s` for real `s != 1`, `q > 0`.
///
/// * `s >= 0`: Euler–Maclaurin.
/// * integer `s <= 0`: `-B_{1-s}(q) / (1 - s)` (small degree) or Hurwitz's
///   Fourier series (large degree).
/// * `s <= -20`: Hurwitz's Fourier series.
/// * `-20 < s < 0`: Taylor expansion about `q = 1` in Riemann zeta values.
pub fn hurwitz_zeta(s: f64, q: f64) -> Result<f64> {
    if !s.is_finite() || !q.is_finite() {
        return Err(PolylogError::NonFinite);
    }
    if q <= 0.0 {
        return Err(PolylogError::Domain("Hurwitz zeta requires q > 0"));
    }
    if s == 1.0 {
        return Err(PolylogError::ZetaPole);
    }
    if s >= 0.0 {
        return Ok(euler_maclaurin(Complex64::new(s, 0.0), q).re);
    }
    if s == s.round() {
        let n = (1.0 - s) as usize;
        if n <= BERNOULLI_EXACT_MAX {
            return Ok(-bernoulli_poly(n, q)? / n as f64);
        }
        return Ok(fourier_reduced(s, q));
    }
    if s <= -20.0 {
        return Ok(fourier_reduced(s, q));
    }
    Ok(taylor_about_one(s, q))
}

/// Fourier path with `q` first reduced into `(0, 1]`.
fn fourier_reduced(s: f64, q: f64) -> f64 {
    let mut q = q;
    let mut correction = 0.0;
    while q > 1.0 {
        q -= 1.0;
        correction += q.powf(-s);
    }
    hurwitz_fourier(s, q) - correction
}

/// `zeta(1 - p, q) = 2 Gamma(p) / (2 pi)^p sum_n cos(pi (p/2 - 2 n q)) / n^p`,
/// for `0 < q <= 1` and `p = 1 - s` large enough for fast decay.
fn hurwitz_fourier(s: f64, q: f64) -> f64 {
    let p = 1.0 - s;
    let prefactor = 2.0 * (ln_gamma(Complex64::new(p, 0.0)).re - p * LN_TWO_PI).exp();
    let mut sum = 0.0;
    for n in 1..10_000u32 {
        let nf = n as f64;
        let decay = nf.powf(-p);
        sum += cos_pi(0.5 * p - 2.0 * nf * q) * decay;
        if decay < 1e-18 {
            break;
        }
    }
    prefactor * sum
}

/// `zeta(s, 1 + h) = sum_k (s)_k / k! (-h)^k zeta(s + k)`, `|h| <= 1/2`.
fn taylor_about_one(s: f64, q: f64) -> f64 {
    let mut q = q;
    let mut outside = 0.0;
    if q < 0.5 {
        outside += q.powf(-s);
        q += 1.0;
    }
    while q > 1.5 {
        q -= 1.0;
        outside -= q.powf(-s);
    }
    let h = q - 1.0;
    let mut coeff = 1.0;
    let mut hpow = 1.0;
    let mut sum = 0.0;
    let mut small_run = 0;
    for k in 0..400usize {
        if k > 0 {
            coeff *= (s + (k - 1) as f64) / k as f64;
            hpow *= -h;
        }
        if hpow == 0.0 {
            break;
        }
        let z = zeta_unchecked(Complex64::new(s + k as f64, 0.0)).re;
        let term = coeff * hpow * z;
        sum += term;
        if (k as f64) > -s + 1.0 && term.abs() <= 1e-17 * sum.abs() {
            small_run += 1;
            if small_run >= 2 {
                break;
            }
        } else {
            small_run = 0;
        }
    }
    sum + outside
}

/// Dirichlet eta `(1 - 2^(1-s)) zeta(s)`, with the removable point `s = 1`
/// mapped to `ln 2` whenever `|s - 1| < 1e-8`.
pub fn dirichlet_eta(s: Complex64) -> Result<Complex64> {
    if !s.re.is_finite() || !s.im.is_finite() {
        return Err(PolylogError::NonFinite);
    }
    if (s - 1.0).norm() < 1e-8 {
        return Ok(Complex64::new(LN_2, 0.0));
    }
    let factor = -expm1((Complex64::new(1.0, 0.0) - s) * LN_2);
    Ok(factor * zeta_unchecked(s))
}

/// Dirichlet beta `4^-s (zeta(s, 1/4) - zeta(s, 3/4))` for real `s`.
///
/// Within `1e-8` of `s = 1` the two Hurwitz poles cancel and the limit
/// `pi / 4` is returned.
pub fn dirichlet_beta(s: f64) -> Result<f64> {
    if !s.is_finite() {
        return Err(PolylogError::NonFinite);
    }
    if (s - 1.0).abs() < 1e-8 {
        return Ok(PI / 4.0);
    }
    let a = hurwitz_zeta(s, 0.25)?;
    let b = hurwitz_zeta(s, 0.75)?;
    Ok((-s * 4f64.ln()).exp() * (a - b))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn rel(a: f64, b: f64) -> f64 {
        (a - b).abs() / b.abs()
    }

    #[test]
    fn zeta_examples() {
        let z2 = riemann_zeta(c(2.0, 0.0)).unwrap();
        assert!(rel(z2.re, PI * PI / 6.0) < 1e-15);
        assert_eq!(z2.im, 0.0);
        assert_eq!(riemann_zeta(c(0.0, 0.0)).unwrap(), c(-0.5, 0.0));
        let zero = riemann_zeta(c(0.5, 14.134725141734694)).unwrap();
        assert!(zero.norm() <= 1e-10, "{zero}");
        assert_eq!(riemann_zeta(c(1.0, 0.0)), Err(PolylogError::ZetaPole));
    }

    #[test]
    fn zeta_trivial_zeros_are_exact() {
        for n in 1..30 {
            let z = riemann_zeta(c(-2.0 * n as f64, 0.0)).unwrap();
            assert_eq!(z, c(0.0, 0.0));
        }
    }

    #[test]
    fn zeta_negative_integers() {
        assert!(rel(riemann_zeta(c(-1.0, 0.0)).unwrap().re, -1.0 / 12.0) < 1e-14);
        assert!(rel(riemann_zeta(c(-3.0, 0.0)).unwrap().re, 1.0 / 120.0) < 1e-14);
    }

    #[test]
    fn zeta_near_pole() {
        let s = 1.0 + 1e-7;
        let eps = s - 1.0;
        let z = riemann_zeta(c(s, 0.0)).unwrap();
        let laurent = 1.0 / eps + 0.5772156649015329 + 0.0728158454836767 * eps;
        assert!(rel(z.re, laurent) < 1e-13);
    }

    #[test]
    fn hurwitz_examples() {
        assert!(rel(hurwitz_zeta(2.0, 1.0).unwrap(), 1.6449340668482264) < 1e-15);
        assert!(rel(hurwitz_zeta(2.0, 0.5).unwrap(), 4.934802200544679) < 1e-15);
        assert!(rel(hurwitz_zeta(-1.0, 0.3).unwrap(), 0.021666666666666667) < 1e-14);
        assert_eq!(hurwitz_zeta(1.0, 0.3), Err(PolylogError::ZetaPole));
        assert!(matches!(
            hurwitz_zeta(2.0, 0.0),
            Err(PolylogError::Domain(_))
        ));
    }

    #[test]
    fn hurwitz_paths_agree_at_boundaries() {
        // Taylor path vs Fourier path just either side of s = -20
        for &q in &[0.2, 0.5, 0.9] {
            let a = taylor_about_one(-20.5, q);
            let b = fourier_reduced(-20.5, q);
            assert!(rel(a, b) < 1e-12, "q={q}: {a} vs {b}");
        }
        // Bernoulli path vs Taylor path near an integer
        let a = hurwitz_zeta(-3.0, 0.3).unwrap();
        let b = hurwitz_zeta(-3.0 + 1e-9, 0.3).unwrap();
        assert!(rel(a, b) < 1e-7);
    }

    #[test]
    fn eta_examples() {
        assert_eq!(dirichlet_eta(c(1.0, 0.0)).unwrap(), c(LN_2, 0.0));
        assert!(rel(dirichlet_eta(c(2.0, 0.0)).unwrap().re, PI * PI / 12.0) < 1e-15);
        assert!(rel(dirichlet_eta(c(0.0, 0.0)).unwrap().re, 0.5) < 1e-15);
    }

    #[test]
    fn beta_examples() {
        assert_eq!(dirichlet_beta(1.0).unwrap(), PI / 4.0);
        assert!(rel(dirichlet_beta(2.0).unwrap(), 0.9159655941772190) < 1e-14);
        assert!(rel(dirichlet_beta(0.0).unwrap(), 0.5) < 1e-15);
        // beta(-1) = E_1 / 2 = 0 ... beta(-2k) = E_{2k}/2: beta(-2) = -1/2
        assert!((dirichlet_beta(-2.0).unwrap() + 0.5).abs() < 1e-14);
        // beta(3) = pi^3 / 32
        assert!(rel(dirichlet_beta(3.0).unwrap(), PI.powi(3) / 32.0) < 1e-14);
    }
}
