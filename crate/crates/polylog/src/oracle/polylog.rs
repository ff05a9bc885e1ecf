//! Reference polylogarithm, closed forms and identity residuals.

use super::complex::ExtendedComplex;
use super::dd::ExtendedReal;
use super::functions::{
    em_cutoff, euler_maclaurin_from_powers, inverse_powers, oracle_gamma, oracle_zeta,
};
use crate::error::{PolylogError, Result};
use num_complex::Complex64;

/// Largest `n` for which the rational form of `Li_{-n}` is available.
pub const NEGINT_MAX: usize = 12;

const DIRECT_RADIUS: f64 = 0.5;
const DIRECT_RADIUS_MAX: f64 = 0.99;
const LOG_SERIES_MAX_T: f64 = 0.55;
const INTEGER_GAP: f64 = 1e-3;
const TERM_TOL: f64 = 1e-34;
const DIRECT_MAX_TERMS: usize = 20_000;
const LOG_SERIES_MAX_TERMS: usize = 500;

/// Numerators `P_n` of `Li_{-n}(z) = P_n(z) / (1 - z)^(n+1)`, from
/// `P_0 = z` and `P_{n+1} = z (P_n' (1 - z) + (n + 1) P_n)`.
const fn numerator_table() -> [[i64; NEGINT_MAX + 2]; NEGINT_MAX + 1] {
    let mut t = [[0i64; NEGINT_MAX + 2]; NEGINT_MAX + 1];
    t[0][1] = 1;
    let mut n = 0;
    while n < NEGINT_MAX {
        let p = t[n];
        let mut next = [0i64; NEGINT_MAX + 2];
        let mut i = 1;
        while i < NEGINT_MAX + 2 {
            // coefficient of z^i in z * (P'(1 - z) + (n + 1) P)
            let d_i_minus_1 = i as i64 * p[i];
            let d_i_minus_2 = if i >= 2 { (i as i64 - 1) * p[i - 1] } else { 0 };
            next[i] = d_i_minus_1 - d_i_minus_2 + (n as i64 + 1) * p[i - 1];
            i += 1;
        }
        t[n + 1] = next;
        n += 1;
    }
    t
}

const NUMERATORS: [[i64; NEGINT_MAX + 2]; NEGINT_MAX + 1] = numerator_table();

/// Integer coefficients of the numerator of `Li_{-n}`, lowest degree first.
pub fn negint_numerator(n: usize) -> Result<&'static [i64]> {
    if n > NEGINT_MAX {
        return Err(PolylogError::UnsupportedIndex {
            index: n,
            max: NEGINT_MAX,
        });
    }
    Ok(&NUMERATORS[n][..n + 2])
}

/// `Li_{-n}(z)` as a rational function of `z`, evaluated in binary64.
pub fn negint_closed_form(n: usize, z: Complex64) -> Result<Complex64> {
    let coeffs = negint_numerator(n)?;
    if z == Complex64::new(1.0, 0.0) {
        return Err(PolylogError::Pole);
    }
    let num = coeffs
        .iter()
        .rev()
        .fold(Complex64::new(0.0, 0.0), |acc, &c| acc * z + c as f64);
    let den = (Complex64::new(1.0, 0.0) - z).powi(n as i32 + 1);
    Ok(num / den)
}

fn negint_closed_form_dd(n: usize, z: ExtendedComplex) -> Result<ExtendedComplex> {
    let coeffs = negint_numerator(n)?;
    let one_minus = ExtendedComplex::ONE - z;
    if one_minus.is_zero() {
        return Err(PolylogError::Pole);
    }
    let num = coeffs
        .iter()
        .rev()
        .fold(ExtendedComplex::ZERO, |acc, &c| acc * z + c as f64);
    let mut den = ExtendedComplex::ONE;
    for _ in 0..=n {
        den *= one_minus;
    }
    Ok(num / den)
}

/// Compensated double-double sum.
pub fn extended_sum(terms: &[ExtendedReal]) -> Result<ExtendedReal> {
    let mut acc = ExtendedReal::ZERO;
    for t in terms {
        if !t.is_finite() {
            return Err(PolylogError::NonFinite);
        }
        acc += *t;
    }
    if acc.is_finite() {
        Ok(acc)
    } else {
        Err(PolylogError::Overflow)
    }
}

fn as_nonpositive_integer(s: Complex64) -> Option<usize> {
    if s.im == 0.0 && s.re <= 0.0 && s.re == s.re.round() {
        Some((-s.re) as usize)
    } else {
        None
    }
}

fn near_positive_integer(s: Complex64) -> bool {
    let n = s.re.round().max(1.0);
    (s - n).norm() < INTEGER_GAP
}

/// Treats a negative-zero imaginary part as `+0`.
fn upper_side(z: Complex64) -> Complex64 {
    if z.im == 0.0 {
        Complex64::new(z.re, 0.0)
    } else {
        z
    }
}

/// Reference value of `Li_s(z)` in double-double.
///
/// Paths, in order of preference: the rational form for `s = 0, -1, .., -12`;
/// the defining sum for `|z| <= 1/2`; the expansion in `ln z` for
/// `|ln z| <= 1.1 pi` with `s` at least `1e-3` from every positive integer;
/// the defining sum for `|z| <= 0.99`. Anything else is an
/// [`PolylogError::OracleDomain`] error. Branch conventions match the engine.
pub fn oracle_polylog(s: Complex64, z: Complex64) -> Result<ExtendedComplex> {
    check_finite(s, z)?;
    let z = upper_side(z);
    if let Some(n) = as_nonpositive_integer(s).filter(|&n| n <= NEGINT_MAX) {
        return negint_closed_form_dd(n, ExtendedComplex::from(z));
    }
    oracle_polylog_series(s, z)
}

/// [`oracle_polylog`] without the rational shortcut for non-positive integer `s`.
pub fn oracle_polylog_series(s: Complex64, z: Complex64) -> Result<ExtendedComplex> {
    check_finite(s, z)?;
    let z = upper_side(z);
    if z == Complex64::new(0.0, 0.0) {
        return Ok(ExtendedComplex::ZERO);
    }
    let zd = ExtendedComplex::from(z);
    let modulus = z.norm();
    if modulus <= DIRECT_RADIUS {
        return direct_sum(s, zd, modulus);
    }
    let mu = zd.ln();
    let t = mu.norm().to_f64() / (2.0 * std::f64::consts::PI);
    if t <= LOG_SERIES_MAX_T && !near_positive_integer(s) {
        return log_series(s, mu);
    }
    if modulus <= DIRECT_RADIUS_MAX {
        return direct_sum(s, zd, modulus);
    }
    Err(PolylogError::OracleDomain(
        "oracle covers |z| <= 0.99, |ln z| <= 1.1 pi off positive integers, or s = 0..-12",
    ))
}

fn check_finite(s: Complex64, z: Complex64) -> Result<()> {
    if s.re.is_finite() && s.im.is_finite() && z.re.is_finite() && z.im.is_finite() {
        Ok(())
    } else {
        Err(PolylogError::NonFinite)
    }
}

/// `sum_k z^k k^-s`.
fn direct_sum(s: Complex64, z: ExtendedComplex, modulus: f64) -> Result<ExtendedComplex> {
    let sd = ExtendedComplex::from(s);
    let tail_factor = 1.0 / (1.0 - modulus);
    let k_min = if s.re < 0.0 {
        (s.re / modulus.ln()).ceil().max(1.0) as usize
    } else {
        1
    };
    let mut sum = ExtendedComplex::ZERO;
    let mut power = z;
    for k in 1..=DIRECT_MAX_TERMS {
        let ln_k = ExtendedReal::from(k as f64).ln();
        let term = power * (-(sd * ln_k)).exp();
        sum += term;
        if k >= k_min && term.approx_norm() * tail_factor <= TERM_TOL * sum.approx_norm() {
            return Ok(sum);
        }
        power *= z;
    }
    Err(PolylogError::NotConverged {
        terms: DIRECT_MAX_TERMS,
    })
}

/// `Gamma(1 - s) (-mu)^(s-1) + sum_k zeta(s - k) mu^k / k!`.
///
/// For `Re(s - k) < -4` the zeta values are reflected,
/// `zeta(s - k) = 2 (2 pi)^(s-k-1) sin(pi (s - k) / 2) Gamma(1 - s + k) zeta(1 - s + k)`,
/// and `Gamma(1 - s + k) (mu / 2 pi)^k / k!` is carried by recurrence.
fn log_series(s: Complex64, mu: ExtendedComplex) -> Result<ExtendedComplex> {
    let sd = ExtendedComplex::from(s);
    let one_minus_s = ExtendedComplex::ONE - sd;
    let mut sum = if mu.is_zero() {
        if s.re <= 1.0 {
            return Err(PolylogError::OracleDomain("pole of Li_s at z = 1"));
        }
        ExtendedComplex::ZERO
    } else {
        let neg_mu = upper_cut(-mu);
        oracle_gamma(one_minus_s)? * neg_mu.powc(sd - 1.0)
    };

    let two_pi = ExtendedReal::PI * 2.0;
    let ratio = mu / two_pi;
    let (sin_half, cos_half) = (sd * 0.5).sin_cos_pi();
    let reflect_prefactor = ((sd - 1.0) * two_pi.ln()).exp() * 2.0;

    let mut mu_pow = ExtendedComplex::ONE;
    let mut reflected: Option<Reflected> = None;
    let mut small_run = 0;
    for k in 0..LOG_SERIES_MAX_TERMS {
        if k > 0 {
            mu_pow = mu_pow * mu / k as f64;
        }
        let w = sd - k as f64;
        let term = if w.re.hi >= -4.0 {
            oracle_zeta(w)? * mu_pow
        } else {
            let state = match reflected.as_mut() {
                Some(st) => {
                    st.advance(one_minus_s, ratio, k);
                    st
                }
                None => reflected.insert(Reflected::start(one_minus_s, ratio, k)?),
            };
            let sine = match k % 4 {
                0 => sin_half,
                1 => -cos_half,
                2 => -sin_half,
                _ => cos_half,
            };
            reflect_prefactor * sine * state.weight * state.zeta()
        };
        sum += term;
        if !sum.is_finite() {
            return Err(PolylogError::Overflow);
        }
        if term.approx_norm() <= TERM_TOL * sum.approx_norm() {
            small_run += 1;
            if small_run >= 2 && k >= 1 {
                return Ok(sum);
            }
        } else {
            small_run = 0;
        }
    }
    Err(PolylogError::NotConverged {
        terms: LOG_SERIES_MAX_TERMS,
    })
}

fn upper_cut(w: ExtendedComplex) -> ExtendedComplex {
    if w.im.is_zero() {
        ExtendedComplex::new(w.re, ExtendedReal::ZERO)
    } else {
        w
    }
}

/// State of the reflected ladder at index `k`: the weight
/// `Gamma(1 - s + k) (mu / 2 pi)^k / k!` and the table `n^-(1 - s + k)`.
struct Reflected {
    weight: ExtendedComplex,
    arg: ExtendedComplex,
    powers: Vec<ExtendedComplex>,
    inverses: Vec<ExtendedReal>,
}

impl Reflected {
    fn start(one_minus_s: ExtendedComplex, ratio: ExtendedComplex, k: usize) -> Result<Self> {
        let arg = one_minus_s + k as f64;
        let mut weight = oracle_gamma(arg)?;
        for i in 1..=k {
            weight = weight * ratio / i as f64;
        }
        // Re(arg) only grows, so the tail shrinks with every step
        let cutoff = em_cutoff(arg);
        let powers = inverse_powers(arg, cutoff);
        let inverses = (0..=cutoff)
            .map(|n| {
                if n == 0 {
                    ExtendedReal::ZERO
                } else {
                    ExtendedReal::from(n as f64).recip()
                }
            })
            .collect();
        Ok(Self {
            weight,
            arg,
            powers,
            inverses,
        })
    }

    /// Moves from `k - 1` to `k`.
    fn advance(&mut self, one_minus_s: ExtendedComplex, ratio: ExtendedComplex, k: usize) {
        let prev = one_minus_s + (k - 1) as f64;
        self.weight = self.weight * prev * ratio / k as f64;
        self.arg = one_minus_s + k as f64;
        for (p, inv) in self.powers.iter_mut().zip(&self.inverses).skip(1) {
            *p = *p * *inv;
        }
    }

    fn zeta(&self) -> ExtendedComplex {
        euler_maclaurin_from_powers(self.arg, &self.powers)
    }
}

/// Relative residuals of two functional identities, evaluated through `engine`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct IdentityResiduals {
    /// `|Li_s(z) - 2^(s-1) (Li_s(sqrt z) + Li_s(-sqrt z))| / |Li_s(z)|`.
    pub square: f64,
    /// For `s = -n`, `n >= 1`: `|Li_s(z) + (-1)^n Li_s(1/z)|` over the larger magnitude.
    pub reciprocal_negint: Option<f64>,
}

/// Evaluates the square and negative-integer reciprocal identities.
/// A failed engine call yields an infinite residual.
pub fn identity_residuals<F>(s: Complex64, z: Complex64, engine: F) -> IdentityResiduals
where
    F: Fn(Complex64, Complex64) -> Result<Complex64>,
{
    let z = upper_side(z);
    let square = (|| -> Result<f64> {
        let whole = engine(s, z)?;
        let root = principal_sqrt(z);
        let plus = engine(s, root)?;
        let minus = engine(s, upper_side(-root))?;
        let scale = ((s - 1.0) * std::f64::consts::LN_2).exp();
        let rhs = scale * (plus + minus);
        Ok(relative(whole - rhs, whole.norm()))
    })()
    .unwrap_or(f64::INFINITY);

    let reciprocal_negint = as_nonpositive_integer(s).filter(|&n| n >= 1).map(|n| {
        (|| -> Result<f64> {
            let a = engine(s, z)?;
            let b = engine(s, upper_side(z.inv()))?;
            let sign = if n % 2 == 0 { 1.0 } else { -1.0 };
            Ok(relative(a + sign * b, a.norm().max(b.norm())))
        })()
        .unwrap_or(f64::INFINITY)
    });
    IdentityResiduals {
        square,
        reciprocal_negint,
    }
}

fn relative(diff: Complex64, scale: f64) -> f64 {
    let d = diff.norm();
    if d == 0.0 {
        0.0
    } else {
        d / scale
    }
}

fn principal_sqrt(z: Complex64) -> Complex64 {
    let r = z.sqrt();
    upper_side(r)
}
