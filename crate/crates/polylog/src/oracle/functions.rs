//! Extended-precision gamma, zeta, Bernoulli numbers and Stieltjes constants.

use super::complex::ExtendedComplex;
use super::dd::ExtendedReal;
use crate::constants::bernoulli_rational;
use crate::error::{PolylogError, Result};
use std::sync::OnceLock;

/// Number of Bernoulli terms used by the Stirling and Euler–Maclaurin tails.
const TAIL_TERMS: usize = 17;
const STIRLING_MIN_RE: f64 = 20.0;
const EM_MIN_CUTOFF: usize = 40;
/// Below this real part the functional equation replaces direct summation.
const REFLECT_BELOW: f64 = 0.5;
const STIELTJES_NODES: usize = 64;
pub const STIELTJES_ORACLE_MAX: usize = 20;

fn bernoulli_dd(n: usize) -> ExtendedReal {
    let (p, q) = bernoulli_rational(n);
    ExtendedReal::from_ratio(p, q)
}

/// `B_{2k} / (2k (2k - 1))`, k = 1..
fn stirling_table() -> &'static [ExtendedReal; TAIL_TERMS] {
    static T: OnceLock<[ExtendedReal; TAIL_TERMS]> = OnceLock::new();
    T.get_or_init(|| {
        std::array::from_fn(|i| {
            let n = 2 * (i + 1);
            bernoulli_dd(n) / ((n * (n - 1)) as f64)
        })
    })
}

/// `B_{2k} / (2k)!`, k = 1..
fn em_table() -> &'static [ExtendedReal; TAIL_TERMS] {
    static T: OnceLock<[ExtendedReal; TAIL_TERMS]> = OnceLock::new();
    T.get_or_init(|| {
        let mut fact = ExtendedReal::ONE;
        std::array::from_fn(|i| {
            let n = 2 * (i + 1);
            fact = fact * ((n - 1) as f64) * (n as f64);
            bernoulli_dd(n) / fact
        })
    })
}

/// `ln n` for `n = 0..` (entry 0 unused), extended on demand.
fn ln_table(max: usize) -> Vec<ExtendedReal> {
    static T: OnceLock<Vec<ExtendedReal>> = OnceLock::new();
    let cached = T.get_or_init(|| {
        (0..=256)
            .map(|n| {
                if n == 0 {
                    ExtendedReal::ZERO
                } else {
                    ExtendedReal::from(n as f64).ln()
                }
            })
            .collect()
    });
    if max < cached.len() {
        return cached[..=max].to_vec();
    }
    let mut out = cached.clone();
    out.extend((cached.len()..=max).map(|n| ExtendedReal::from(n as f64).ln()));
    out
}

/// `n^-w` for `n = 0..=cutoff` (entry 0 unused).
pub(crate) fn inverse_powers(w: ExtendedComplex, cutoff: usize) -> Vec<ExtendedComplex> {
    ln_table(cutoff)
        .into_iter()
        .enumerate()
        .map(|(n, l)| {
            if n == 0 {
                ExtendedComplex::ZERO
            } else {
                (-(w * l)).exp()
            }
        })
        .collect()
}

pub(crate) fn em_cutoff(w: ExtendedComplex) -> usize {
    EM_MIN_CUTOFF.max((3.0 * w.approx_norm()).ceil() as usize)
}

/// Euler–Maclaurin value of `zeta(w)` from a table of `n^-w`, `n <= N`.
pub(crate) fn euler_maclaurin_from_powers(
    w: ExtendedComplex,
    powers: &[ExtendedComplex],
) -> ExtendedComplex {
    let cutoff = powers.len() - 1;
    let nf = cutoff as f64;
    let mut sum = ExtendedComplex::ZERO;
    for p in powers[1..cutoff].iter().rev() {
        sum += *p;
    }
    let tail_pow = powers[cutoff];
    sum += tail_pow * nf / (w - 1.0);
    sum += tail_pow * 0.5;
    let inv_n2 = ExtendedReal::from(nf).sqr().recip();
    let mut rising = w;
    let mut factor = tail_pow / nf;
    for (j, c) in em_table().iter().enumerate() {
        let t = rising * factor * *c;
        sum += t;
        if t.approx_norm() <= 1e-36 * sum.approx_norm() {
            break;
        }
        let k = 2.0 * (j + 1) as f64;
        rising = rising * (w + (k - 1.0)) * (w + k);
        factor = factor * inv_n2;
    }
    sum
}

fn is_one(w: ExtendedComplex) -> bool {
    w.im.is_zero() && (w.re - 1.0).is_zero()
}

/// Riemann zeta in double-double.
pub fn oracle_zeta(w: ExtendedComplex) -> Result<ExtendedComplex> {
    if !w.is_finite() {
        return Err(PolylogError::NonFinite);
    }
    if is_one(w) {
        return Err(PolylogError::ZetaPole);
    }
    if w.is_zero() {
        return Ok(ExtendedComplex::from(-0.5));
    }
    if w.re.hi >= REFLECT_BELOW {
        let powers = inverse_powers(w, em_cutoff(w));
        return Ok(euler_maclaurin_from_powers(w, &powers));
    }
    // zeta(w) = 2 (2 pi)^(w-1) sin(pi w / 2) Gamma(1 - w) zeta(1 - w)
    let one_minus = ExtendedComplex::ONE - w;
    let two_pi = ExtendedReal::PI * 2.0;
    let prefactor = ((w - 1.0) * two_pi.ln()).exp() * 2.0;
    let (sine, _) = (w * 0.5).sin_cos_pi();
    let value = prefactor * sine * oracle_gamma(one_minus)? * oracle_zeta(one_minus)?;
    if value.is_finite() {
        Ok(value)
    } else {
        Err(PolylogError::Overflow)
    }
}

fn stirling_ln_gamma(w: ExtendedComplex) -> ExtendedComplex {
    let inv = ExtendedComplex::ONE / w;
    let inv2 = inv * inv;
    let mut pow = inv;
    let mut series = ExtendedComplex::ZERO;
    for c in stirling_table() {
        series += pow * *c;
        pow *= inv2;
    }
    (w - 0.5) * w.ln() - w + ExtendedReal::HALF_LN_TWO_PI + series
}

/// Gamma function in double-double.
pub fn oracle_gamma(w: ExtendedComplex) -> Result<ExtendedComplex> {
    if !w.is_finite() {
        return Err(PolylogError::NonFinite);
    }
    if w.im.is_zero() && w.re.hi <= 0.0 && (w.re - w.re.hi.round()).is_zero() {
        return Err(PolylogError::GammaPole(w.re.hi));
    }
    if w.re.hi < 0.5 {
        let (sine, _) = w.sin_cos_pi();
        let g = oracle_gamma(ExtendedComplex::ONE - w)?;
        return Ok(ExtendedComplex::real(ExtendedReal::PI) / (sine * g));
    }
    let mut shifted = w;
    let mut prod = ExtendedComplex::ONE;
    while shifted.re.hi < STIRLING_MIN_RE {
        prod *= shifted;
        shifted = shifted + 1.0;
    }
    let value = stirling_ln_gamma(shifted).exp() / prod;
    if value.is_finite() {
        Ok(value)
    } else {
        Err(PolylogError::Overflow)
    }
}

/// `B_n` computed as `-n zeta(1 - n)` through the functional equation.
pub fn bernoulli_oracle(n: usize) -> Result<ExtendedReal> {
    match n {
        0 => Ok(ExtendedReal::ONE),
        1 => Ok(ExtendedReal::from(-0.5)),
        _ if n % 2 == 1 => Ok(ExtendedReal::ZERO),
        _ => {
            let z = oracle_zeta(ExtendedComplex::from(1.0 - n as f64))?;
            Ok(-(z.re * n as f64))
        }
    }
}

/// Stieltjes constant `gamma_j` from Cauchy integrals of `zeta(1 + tau) - 1/tau`
/// on `|tau| = 1/2`.
pub fn stieltjes_oracle(j: usize) -> Result<ExtendedReal> {
    if j > STIELTJES_ORACLE_MAX {
        return Err(PolylogError::UnsupportedIndex {
            index: j,
            max: STIELTJES_ORACLE_MAX,
        });
    }
    let coeffs = contour_coefficients(STIELTJES_NODES, ExtendedReal::from(0.5), j, |tau| {
        Ok(oracle_zeta(tau + 1.0)? - ExtendedComplex::ONE / tau)
    })?;
    let mut fact = ExtendedReal::ONE;
    for i in 2..=j {
        fact = fact * i as f64;
    }
    let sign = if j.is_multiple_of(2) { 1.0 } else { -1.0 };
    Ok(coeffs[j].re * fact * sign)
}

/// Taylor coefficients `a_0..=a_{j_max}` of an analytic `f` by the trapezoid rule
/// on `|tau| = radius` with `nodes` points.
pub(crate) fn contour_coefficients<F>(
    nodes: usize,
    radius: ExtendedReal,
    j_max: usize,
    f: F,
) -> Result<Vec<ExtendedComplex>>
where
    F: Fn(ExtendedComplex) -> Result<ExtendedComplex>,
{
    let mut units = Vec::with_capacity(nodes);
    for k in 0..nodes {
        let angle = ExtendedReal::from_ratio(2 * k as i64, nodes as i64);
        let (s, c) = angle.sin_cos_pi();
        units.push(ExtendedComplex::new(c, s));
    }
    let values = units
        .iter()
        .map(|u| f(*u * radius))
        .collect::<Result<Vec<_>>>()?;
    let mut out = Vec::with_capacity(j_max + 1);
    let mut radius_pow = ExtendedReal::ONE;
    for j in 0..=j_max {
        let mut acc = ExtendedComplex::ZERO;
        for (k, v) in values.iter().enumerate() {
            // u_k^-j = conj(u_{jk mod nodes})
            acc += *v * units[(j * k) % nodes].conj();
        }
        out.push(acc / (radius_pow * nodes as f64));
        radius_pow *= radius;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constants::stieltjes;
    use num_complex::Complex64;

    fn ec(re: f64, im: f64) -> ExtendedComplex {
        ExtendedComplex::from(Complex64::new(re, im))
    }

    fn rel(a: ExtendedComplex, b: ExtendedComplex) -> f64 {
        (a - b).norm().to_f64() / b.norm().to_f64()
    }

    #[test]
    fn zeta_even_values() {
        let pi2 = ExtendedReal::PI.sqr();
        let z2 = oracle_zeta(ec(2.0, 0.0)).unwrap();
        assert!(rel(z2, ExtendedComplex::real(pi2 / 6.0)) < 1e-30);
        let z4 = oracle_zeta(ec(4.0, 0.0)).unwrap();
        assert!(rel(z4, ExtendedComplex::real(pi2.sqr() / 90.0)) < 1e-30);
    }

    #[test]
    fn zeta_negative_side() {
        let z = oracle_zeta(ec(-1.0, 0.0)).unwrap();
        assert!(rel(z, ExtendedComplex::real(ExtendedReal::from_ratio(-1, 12))) < 1e-30);
        let z = oracle_zeta(ec(-11.0, 0.0)).unwrap();
        assert!(
            rel(
                z,
                ExtendedComplex::real(ExtendedReal::from_ratio(691, 32760))
            ) < 1e-29
        );
        assert!(oracle_zeta(ec(1.0, 0.0)).is_err());
    }

    #[test]
    fn zeta_complex_matches_reference() {
        // mpmath zeta(0.5 + 3i)
        let z = oracle_zeta(ec(0.5, 3.0)).unwrap();
        let expected = Complex64::new(0.5327366709742329, -0.07889651342583338);
        assert!((z.to_complex() - expected).norm() < 1e-15);
    }

    #[test]
    fn gamma_values() {
        let g = oracle_gamma(ec(0.5, 0.0)).unwrap();
        let sqrt_pi = ExtendedReal::PI.sqrt();
        assert!(rel(g, ExtendedComplex::real(sqrt_pi)) < 1e-30);
        let g = oracle_gamma(ec(1.0, 1.0)).unwrap();
        let expected = Complex64::new(0.49801566811835604, -0.15494982830181069);
        assert!((g.to_complex() - expected).norm() < 2e-16);
        let g = oracle_gamma(ec(-2.5, 0.0)).unwrap();
        // Gamma(-5/2) = -8 sqrt(pi) / 15
        assert!(rel(g, ExtendedComplex::real(sqrt_pi * -8.0 / 15.0)) < 1e-30);
        assert!(oracle_gamma(ec(-3.0, 0.0)).is_err());
    }

    #[test]
    fn bernoulli_matches_table() {
        for n in (2..=34).step_by(2) {
            let b = bernoulli_oracle(n).unwrap();
            let (p, q) = bernoulli_rational(n);
            let exact = ExtendedReal::from_ratio(p, q);
            assert!(((b - exact) / exact).abs().to_f64() < 1e-28, "n = {n}");
        }
    }

    #[test]
    fn stieltjes_matches_table() {
        for j in 0..=10 {
            let g = stieltjes_oracle(j).unwrap().to_f64();
            let t = stieltjes(j).unwrap();
            assert!((g - t).abs() <= 1e-16 * t.abs(), "j = {j}: {g} vs {t}");
        }
    }
}
