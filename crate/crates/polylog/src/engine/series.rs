//! The three series and their stopping rules.

use super::coefficients::q_coefficients_unchecked;
use super::{near_positive_integer, on_cut_positive, principal_ln, EvaluationConfig};
use super::{EvaluationResult, MethodTag, TWO_PI};
use crate::constants::{stieltjes, EULER_GAMMA, STIELTJES_MAX};
use crate::error::{PolylogError, Result};
use crate::special::trig::expm1;
use crate::special::{complex_gamma, riemann_zeta};
use num_complex::Complex64;
use std::sync::OnceLock;

/// Within this distance of a positive integer, Series 2 evaluates its two
/// singular pieces together.
const PAIR_RADIUS: f64 = 0.1;
const LN_GAMMA_TERMS: usize = 20;

/// Partial-sum bookkeeping shared by the series loops.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SeriesState {
    pub running_sum: Complex64,
    pub last_term: Complex64,
    pub second_last_term: Complex64,
    pub k: usize,
}

impl SeriesState {
    pub fn new(initial: Complex64) -> Self {
        Self {
            running_sum: initial,
            last_term: Complex64::new(f64::INFINITY, 0.0),
            second_last_term: Complex64::new(f64::INFINITY, 0.0),
            k: 0,
        }
    }

    pub fn push(&mut self, term: Complex64) {
        self.second_last_term = self.last_term;
        self.last_term = term;
        self.running_sum += term;
        self.k += 1;
    }

    /// `|last| / |sum| <= tol`.
    pub fn last_small(&self, tol: f64) -> bool {
        self.last_term.norm() <= tol * self.running_sum.norm()
    }

    /// Both of the last two terms are at most `tol` relative to the sum.
    pub fn last_two_small(&self, tol: f64) -> bool {
        let scale = tol * self.running_sum.norm();
        self.last_term.norm() <= scale && self.second_last_term.norm() <= scale
    }

    fn finite(&self) -> bool {
        self.running_sum.re.is_finite() && self.running_sum.im.is_finite()
    }
}

/// Series 1: `sum_{k >= 1} z^k / k^s` for `|z| < 1`.
///
/// Stops at the first term whose size relative to the partial sum is at most
/// half the accuracy goal. For `Re(s) < 0` the terms first grow, so the test
/// is not applied before `k = ceil(Re(s) / ln|z|)`.
pub fn series1(s: Complex64, z: Complex64, config: &EvaluationConfig) -> Result<EvaluationResult> {
    let z = on_cut_positive(z);
    let modulus = z.norm();
    if modulus >= 1.0 {
        return Err(PolylogError::Precondition("series 1 requires |z| < 1"));
    }
    let tol = 0.5 * config.accuracy_goal;
    let k_min = if s.re < 0.0 && modulus > 0.0 {
        (s.re / modulus.ln()).ceil().max(1.0) as usize
    } else {
        1
    };
    let mut state = SeriesState::new(Complex64::new(0.0, 0.0));
    let mut power = z;
    let mut converged = false;
    for k in 1..=config.max_terms {
        let kf = k as f64;
        let term = power * Complex64::from_polar(kf.powf(-s.re), -s.im * kf.ln());
        state.push(term);
        if !state.finite() {
            break;
        }
        if k >= k_min && state.last_small(tol) {
            converged = true;
            break;
        }
        power *= z;
    }
    Ok(EvaluationResult::leaf(
        state.running_sum,
        MethodTag::Series1,
        state.k,
        converged,
    ))
}

/// Zeta values `zeta(s - k)`, computed once per series evaluation.
/// The entry at `skip` (the Series 3 pole index) is never evaluated.
struct ZetaLadder {
    s: Complex64,
    skip: Option<usize>,
    values: Vec<Complex64>,
}

impl ZetaLadder {
    fn new(s: Complex64, skip: Option<usize>) -> Self {
        Self {
            s,
            skip,
            values: Vec::with_capacity(64),
        }
    }

    fn get(&mut self, k: usize) -> Result<Complex64> {
        while self.values.len() <= k {
            let i = self.values.len();
            let value = if Some(i) == self.skip {
                Complex64::new(0.0, 0.0)
            } else {
                riemann_zeta(self.s - i as f64)?
            };
            self.values.push(value);
        }
        Ok(self.values[k])
    }
}

/// `mu = ln z` and `L = ln(-ln z)`, both principal with `+0` on the cuts.
fn logs(z: Complex64) -> (Complex64, Complex64) {
    let mu = principal_ln(z);
    let big_l = principal_ln(-mu);
    (mu, big_l)
}

/// Sums `sum_k a_k mu^k / k!` where `a_k` comes from `coefficient(k)`,
/// starting from `initial`; stops once the last two terms are both below half
/// the goal relative to the sum and `k >= k_min`.
fn ln_power_series<F>(
    initial: Complex64,
    mu: Complex64,
    k_min: usize,
    config: &EvaluationConfig,
    mut coefficient: F,
) -> Result<(SeriesState, bool)>
where
    F: FnMut(usize) -> Result<Complex64>,
{
    let tol = 0.5 * config.accuracy_goal;
    let mut state = SeriesState::new(initial);
    let mut power = Complex64::new(1.0, 0.0);
    for k in 0..config.max_terms {
        if k > 0 {
            power *= mu / k as f64;
        }
        let term = if power == Complex64::new(0.0, 0.0) {
            power
        } else {
            coefficient(k)? * power
        };
        state.push(term);
        if !state.finite() {
            return Ok((state, false));
        }
        if k >= k_min.max(1) && state.last_two_small(tol) {
            return Ok((state, true));
        }
    }
    Ok((state, false))
}

/// `zeta(k)` for `k = 0..=LN_GAMMA_TERMS` (entries 0 and 1 unused).
fn zeta_at_integers() -> &'static [f64; LN_GAMMA_TERMS + 1] {
    static T: OnceLock<[f64; LN_GAMMA_TERMS + 1]> = OnceLock::new();
    T.get_or_init(|| {
        std::array::from_fn(|k| {
            if k < 2 {
                0.0
            } else {
                riemann_zeta(Complex64::new(k as f64, 0.0)).map_or(0.0, |z| z.re)
            }
        })
    })
}

/// `ln(1 + w)` for small `w`.
fn ln1p(w: Complex64) -> Complex64 {
    let (a, b) = (w.re, w.im);
    Complex64::new(0.5 * (2.0 * a + a * a + b * b).ln_1p(), b.atan2(1.0 + a))
}

/// `Gamma(1 - s) (-mu)^(s-1) + zeta(1 + tau) mu^m / m!` for `s = m + 1 + tau`,
/// `0 < |tau| <= PAIR_RADIUS`, written as `mu^m / m! * G(tau)` with
/// `G = (zeta(1 + tau) - 1/tau) - (R - 1)/tau`,
/// `R = Gamma(1 - tau) e^(tau L) / prod_{j <= m} (1 + tau/j)`.
fn paired_singular_terms(tau: Complex64, m: usize, mu: Complex64, big_l: Complex64) -> Complex64 {
    let mut regular = Complex64::new(0.0, 0.0);
    for j in (0..=STIELTJES_MAX).rev() {
        let g = stieltjes(j).unwrap_or(0.0);
        regular = regular * (-tau / (j + 1) as f64) + g;
    }
    let zetas = zeta_at_integers();
    let mut ln_r = Complex64::new(0.0, 0.0);
    for k in (2..=LN_GAMMA_TERMS).rev() {
        ln_r = (ln_r + zetas[k] / k as f64) * tau;
    }
    ln_r = (ln_r + EULER_GAMMA + big_l) * tau;
    for j in 1..=m {
        ln_r -= ln1p(tau / j as f64);
    }
    let g = regular - expm1(ln_r) / tau;
    let mut power = Complex64::new(1.0, 0.0);
    for j in 1..=m {
        power *= mu / j as f64;
    }
    power * g
}

/// Series 2: `Gamma(1 - s) (-ln z)^(s-1) + sum_{k >= 0} zeta(s - k) (ln z)^k / k!`.
///
/// Valid for `|ln z| < 2 pi` with `s` not within `T2` of a positive integer.
/// At `z = 1` it reduces to `zeta(s)` when `Re(s) > 1`.
pub fn series2(s: Complex64, z: Complex64, config: &EvaluationConfig) -> Result<EvaluationResult> {
    let z = on_cut_positive(z);
    if z == Complex64::new(0.0, 0.0) {
        return Err(PolylogError::Precondition("series 2 requires z != 0"));
    }
    if near_positive_integer(s, config.integer_proximity).is_some() {
        return Err(PolylogError::Precondition(
            "series 2 requires s away from positive integers",
        ));
    }
    let (mu, big_l) = logs(z);
    if mu.norm() >= TWO_PI {
        return Err(PolylogError::Precondition(
            "series 2 requires |ln z| < 2 pi",
        ));
    }
    let paired = if mu == Complex64::new(0.0, 0.0) {
        None
    } else {
        near_positive_integer(s, PAIR_RADIUS).map(|n| n as usize - 1)
    };
    let leading = if mu == Complex64::new(0.0, 0.0) {
        if s.re <= 1.0 {
            return Err(PolylogError::Pole);
        }
        Complex64::new(0.0, 0.0)
    } else if let Some(m) = paired {
        paired_singular_terms(s - (m + 1) as f64, m, mu, big_l)
    } else {
        complex_gamma(Complex64::new(1.0, 0.0) - s)? * ((s - 1.0) * big_l).exp()
    };
    let mut ladder = ZetaLadder::new(s, paired);
    let k_min = paired.map_or(1, |m| m + 1);
    let (state, converged) = ln_power_series(leading, mu, k_min, config, |k| ladder.get(k))?;
    Ok(EvaluationResult::leaf(
        state.running_sum,
        MethodTag::Series2,
        state.k,
        converged,
    ))
}

/// Series 3, for `s = n + tau` within `T2` of a positive integer `n`.
///
/// The two singular pieces of Series 2 (the gamma prefactor and the
/// `zeta(1 + tau)` term at `k = n - 1`) are replaced by
/// `(ln z)^(n-1) / (n-1)! * Q_{n-1}(L, tau)`, with `Q` truncated to the
/// configured Taylor order in `tau` and `L = ln(-ln z)`.
pub fn series3(s: Complex64, z: Complex64, config: &EvaluationConfig) -> Result<EvaluationResult> {
    let z = on_cut_positive(z);
    if z == Complex64::new(0.0, 0.0) {
        return Err(PolylogError::Precondition("series 3 requires z != 0"));
    }
    let n = near_positive_integer(s, config.integer_proximity).ok_or(PolylogError::Precondition(
        "series 3 requires s near a positive integer",
    ))? as usize;
    let (mu, big_l) = logs(z);
    if mu.norm() >= TWO_PI {
        return Err(PolylogError::Precondition(
            "series 3 requires |ln z| < 2 pi",
        ));
    }
    let tau = s - n as f64;
    let pole_index = n - 1;
    let q_value = if mu == Complex64::new(0.0, 0.0) {
        if n == 1 {
            return Err(PolylogError::Pole);
        }
        // multiplied by mu^(n-1) = 0
        Complex64::new(0.0, 0.0)
    } else {
        let coeffs = q_coefficients_unchecked(pole_index, big_l, config.taylor_order);
        coeffs
            .iter()
            .rev()
            .fold(Complex64::new(0.0, 0.0), |acc, &c| acc * tau + c)
    };
    let mut ladder = ZetaLadder::new(s, Some(pole_index));
    let (state, converged) =
        ln_power_series(Complex64::new(0.0, 0.0), mu, pole_index + 1, config, |k| {
            if k == pole_index {
                Ok(q_value)
            } else {
                ladder.get(k)
            }
        })?;
    Ok(EvaluationResult::leaf(
        state.running_sum,
        MethodTag::Series3,
        state.k,
        converged,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::{LN_2, PI};

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn cfg() -> EvaluationConfig {
        EvaluationConfig::default()
    }

    fn close(a: Complex64, b: Complex64, tol: f64) -> bool {
        (a - b).norm() <= tol * b.norm()
    }

    #[test]
    fn series1_examples() {
        let r = series1(c(1.0, 0.0), c(0.5, 0.0), &cfg()).unwrap();
        assert!(r.converged);
        assert!(close(r.value, c(LN_2, 0.0), 1e-12));
        let r = series1(c(-2.0, 0.0), c(0.1, 0.0), &cfg()).unwrap();
        assert!(close(r.value, c(0.1508916323731139, 0.0), 1e-12));
        let r = series1(c(2.0, 0.0), c(0.5, 0.0), &cfg()).unwrap();
        assert!(close(r.value, c(0.5822405264650125, 0.0), 1e-12));
        assert!(series1(c(2.0, 0.0), c(1.0, 0.0), &cfg()).is_err());
    }

    #[test]
    fn series1_waits_for_growth_phase() {
        // Re(s) = -8, |z| = 0.01: terms grow until k = ceil(8 / 4.6) = 2
        let s = c(-8.0, 0.0);
        let z = c(0.01, 0.0);
        let r = series1(s, z, &cfg()).unwrap();
        let exact: f64 = (1..60).map(|k| 0.01f64.powi(k) * (k as f64).powi(8)).sum();
        assert!(close(r.value, c(exact, 0.0), 1e-12));
    }

    #[test]
    fn series1_term_cap() {
        let mut tight = cfg();
        tight.max_terms = 5;
        let r = series1(c(2.0, 0.0), c(0.9, 0.0), &tight).unwrap();
        assert!(!r.converged);
        assert_eq!(r.terms_used, 5);
        assert!(r.checked().is_err());
    }

    #[test]
    fn series2_examples() {
        let r = series2(c(-2.0, 0.0), c(0.75, 0.0), &cfg()).unwrap();
        assert!(close(r.value, c(84.0, 0.0), 1e-12), "{}", r.value);
        let r = series2(c(-1.0, 0.0), c(0.75, 0.0), &cfg()).unwrap();
        assert!(close(r.value, c(12.0, 0.0), 1e-12), "{}", r.value);
        let r = series2(c(2.5, 0.0), c(1.0, 0.0), &cfg()).unwrap();
        assert!(close(r.value, c(1.3414872572509171, 0.0), 1e-13));
        assert!(series2(c(2.0, 0.0), c(0.5, 0.0), &cfg()).is_err());
        assert!(series2(c(2.5, 0.0), c(1e-4, 0.0), &cfg()).is_err());
        assert_eq!(
            series2(c(0.5, 0.0), c(1.0, 0.0), &cfg()),
            Err(PolylogError::Pole)
        );
    }

    #[test]
    fn series2_near_integers_matches_oracle() {
        let loose = EvaluationConfig {
            integer_proximity: 5e-4,
            ..cfg()
        };
        for (s, z) in [
            (c(3.001, 0.0), c(-0.5, 0.0)),
            (c(2.0, 0.0009), c(0.3, 0.6)),
            (c(1.05, -0.02), c(-0.5, 0.0)),
            (c(4.0999, 0.0), c(2.0, 0.0)),
            (c(0.92, 0.0), c(0.8, 0.0)),
        ] {
            let r = series2(s, z, &loose).unwrap();
            let o = crate::oracle::oracle_polylog(s, z).unwrap().to_complex();
            assert!(close(r.value, o, 1e-13), "{s} {z}: {} vs {o}", r.value);
        }
    }

    #[test]
    fn series3_examples() {
        let r = series3(c(2.0, 0.0), c(2.0, 0.0), &cfg()).unwrap();
        assert!(
            close(r.value, c(PI * PI / 4.0, -PI * LN_2), 1e-13),
            "{}",
            r.value
        );
        let r = series3(c(1.0, 0.0), c(0.75, 0.0), &cfg()).unwrap();
        assert!(close(r.value, c(4f64.ln(), 0.0), 1e-12));
        // 7 zeta(3)/8 - pi^2 ln2 / 12 + ln^3 2 / 6
        let r = series3(c(3.0, 0.0), c(0.5, 0.0), &cfg()).unwrap();
        assert!(
            close(r.value, c(0.5372131936080402, 0.0), 1e-12),
            "{}",
            r.value
        );
        assert!(series3(c(2.5, 0.0), c(0.5, 0.0), &cfg()).is_err());
        let r = series3(c(3.0, 0.0), c(1.0, 0.0), &cfg()).unwrap();
        assert!(close(r.value, c(1.2020569031595942, 0.0), 1e-14));
    }

    #[test]
    fn state_bookkeeping() {
        let mut st = SeriesState::new(c(1.0, 0.0));
        assert!(!st.last_two_small(1.0));
        st.push(c(1e-20, 0.0));
        assert!(st.last_small(1e-12));
        assert!(!st.last_two_small(1e-12));
        st.push(c(0.0, 0.0));
        assert!(st.last_two_small(1e-12));
        assert_eq!(st.k, 2);
    }
}
