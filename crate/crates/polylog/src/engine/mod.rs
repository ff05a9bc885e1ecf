//! The polylogarithm evaluator.
//!
//! Domain selection for `z` (with `mu = ln z`, `t = |mu| / 2 pi`):
//!
//! | Condition | Method |
//! |-----------|--------|
//! | `z = 0` | zero |
//! | `z = 1` | `zeta(s)` for `Re(s) > 1`, pole otherwise |
//! | `2 pi |z| <= |mu|` | Series 1, the defining sum |
//! | `t <= T1`, `s` farther than `T2` from a positive integer | Series 2 |
//! | `t <= T1` | Series 3 |
//! | otherwise | duplication `Li_s(z) = 2^(s-1) (Li_s(sqrt z) + Li_s(-sqrt z))` |
//!
//! All logarithms, powers and square roots are principal, with a zero
//! imaginary part of either sign treated as `+0`. Points on `[1, inf)` are
//! therefore evaluated as limits from below the cut, e.g.
//! `Li_2(2) = pi^2/4 - i pi ln 2`.

mod coefficients;
mod series;

pub use coefficients::{q_coefficients, Q_MAX_ORDER};
pub use series::{series1, series2, series3, SeriesState};

use crate::error::{PolylogError, Result};
use crate::special::riemann_zeta;
use num_complex::Complex64;
use std::f64::consts::{LN_2, PI};

const TWO_PI: f64 = 2.0 * PI;

/// Accuracy goal and tuning thresholds for the evaluator.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EvaluationConfig {
    /// Target relative error, within `[1e-16, 1e-3]`.
    pub accuracy_goal: f64,
    /// Largest `|ln z| / 2 pi` handled by Series 2/3, within `[0.5, 1)`.
    pub series2_threshold: f64,
    /// Distance from a positive integer below which Series 3 replaces Series 2.
    pub integer_proximity: f64,
    /// Number of Taylor coefficients (minus one) used in Series 3, at most 4.
    pub taylor_order: usize,
    pub max_terms: usize,
    /// At least 8.
    pub max_recursion_depth: usize,
}

impl Default for EvaluationConfig {
    fn default() -> Self {
        Self {
            accuracy_goal: 1e-12,
            series2_threshold: 0.512,
            integer_proximity: 1e-3,
            taylor_order: 4,
            max_terms: 10_000,
            max_recursion_depth: 32,
        }
    }
}

impl EvaluationConfig {
    /// Default configuration with a different accuracy goal.
    pub fn with_goal(accuracy_goal: f64) -> Result<Self> {
        let cfg = Self {
            accuracy_goal,
            ..Self::default()
        };
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(PolylogError::InvalidConfig(msg));
        if !(1e-16..=1e-3).contains(&self.accuracy_goal) {
            return bad(format!(
                "accuracy goal {} outside [1e-16, 1e-3]",
                self.accuracy_goal
            ));
        }
        if !(0.5..1.0).contains(&self.series2_threshold) {
            return bad(format!(
                "series 2 threshold {} outside [0.5, 1)",
                self.series2_threshold
            ));
        }
        if !(self.integer_proximity > 0.0 && self.integer_proximity < 0.5) {
            return bad(format!(
                "integer proximity {} outside (0, 0.5)",
                self.integer_proximity
            ));
        }
        if self.taylor_order > Q_MAX_ORDER {
            return bad(format!(
                "taylor order {} above {}",
                self.taylor_order, Q_MAX_ORDER
            ));
        }
        if self.max_terms == 0 {
            return bad("max_terms must be positive".into());
        }
        if self.max_recursion_depth < 8 {
            return bad(format!(
                "max recursion depth {} below 8",
                self.max_recursion_depth
            ));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum MethodTag {
    Series1,
    Series2,
    Series3,
    Duplication,
    SpecialCaseZ1,
    SpecialCaseZ0,
}

impl MethodTag {
    pub fn as_str(&self) -> &'static str {
        match self {
            MethodTag::Series1 => "Series1",
            MethodTag::Series2 => "Series2",
            MethodTag::Series3 => "Series3",
            MethodTag::Duplication => "Duplication",
            MethodTag::SpecialCaseZ1 => "SpecialCaseZ1",
            MethodTag::SpecialCaseZ0 => "SpecialCaseZ0",
        }
    }
}

impl std::fmt::Display for MethodTag {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Value of `Li_s(z)` with diagnostics.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EvaluationResult {
    pub value: Complex64,
    pub method: MethodTag,
    /// Series terms summed, over all recursive sub-evaluations.
    pub terms_used: usize,
    /// Deepest duplication level reached (0 when no duplication was needed).
    pub recursion_depth: usize,
    /// False when some series hit `max_terms` before meeting the stopping rule.
    pub converged: bool,
    /// True at `z = 1` with `Re(s) <= 1`; `value` is then `+inf + 0i`.
    pub is_pole: bool,
}

impl EvaluationResult {
    fn leaf(value: Complex64, method: MethodTag, terms: usize, converged: bool) -> Self {
        Self {
            value,
            method,
            terms_used: terms,
            recursion_depth: 0,
            converged,
            is_pole: false,
        }
    }

    /// The value, or [`PolylogError::NotConverged`] if the series stopped on the term cap.
    pub fn checked(&self) -> Result<Complex64> {
        if self.converged {
            Ok(self.value)
        } else {
            Err(PolylogError::NotConverged {
                terms: self.terms_used,
            })
        }
    }
}

/// Replaces a negative-zero imaginary part by `+0`.
#[inline]
pub(crate) fn on_cut_positive(w: Complex64) -> Complex64 {
    if w.im == 0.0 {
        Complex64::new(w.re, 0.0)
    } else {
        w
    }
}

/// Principal logarithm, `-0` imaginary parts read as `+0`.
#[inline]
pub(crate) fn principal_ln(w: Complex64) -> Complex64 {
    let w = on_cut_positive(w);
    Complex64::new(w.re.hypot(w.im).ln(), w.im.atan2(w.re))
}

/// Principal square root, `-0` imaginary parts read as `+0`.
pub(crate) fn principal_sqrt(w: Complex64) -> Complex64 {
    let w = on_cut_positive(w);
    if w.re == 0.0 && w.im == 0.0 {
        return Complex64::new(0.0, 0.0);
    }
    let t = ((w.re.abs() + w.re.hypot(w.im)) * 0.5).sqrt();
    if w.re >= 0.0 {
        Complex64::new(t, w.im / (2.0 * t))
    } else {
        Complex64::new(w.im.abs() / (2.0 * t), t.copysign(w.im))
    }
}

/// Nearest integer `n >= 1` with `|s - n| <= tol`, if any.
pub(crate) fn near_positive_integer(s: Complex64, tol: f64) -> Option<i64> {
    let n = s.re.round().max(1.0);
    if (s - n).norm() <= tol {
        Some(n as i64)
    } else {
        None
    }
}

/// Crandall's step function: 1 below the real axis and on `[1, inf)`, else 0.
pub fn crandall_theta(z: Complex64) -> i32 {
    if z.im < 0.0 || (z.im == 0.0 && z.re >= 1.0) {
        1
    } else {
        0
    }
}

/// Method that [`polylog`] would use for `(s, z)` at the top level.
pub fn select_method(s: Complex64, z: Complex64, config: &EvaluationConfig) -> MethodTag {
    let z = on_cut_positive(z);
    if z == Complex64::new(0.0, 0.0) {
        return MethodTag::SpecialCaseZ0;
    }
    if z == Complex64::new(1.0, 0.0) {
        return MethodTag::SpecialCaseZ1;
    }
    let mu = principal_ln(z).norm();
    if TWO_PI * z.norm() <= mu {
        return MethodTag::Series1;
    }
    if mu / TWO_PI <= config.series2_threshold {
        if near_positive_integer(s, config.integer_proximity).is_some() {
            MethodTag::Series3
        } else {
            MethodTag::Series2
        }
    } else {
        MethodTag::Duplication
    }
}

/// `Li_s(z)` with diagnostics.
///
/// A series that stops on `max_terms` still returns `Ok` with
/// `converged = false`; use [`EvaluationResult::checked`] to turn that into
/// an error. Exceeding `max_recursion_depth` is an error.
pub fn polylog(s: Complex64, z: Complex64, config: &EvaluationConfig) -> Result<EvaluationResult> {
    config.validate()?;
    if !(s.re.is_finite() && s.im.is_finite() && z.re.is_finite() && z.im.is_finite()) {
        return Err(PolylogError::NonFinite);
    }
    dispatch(s, on_cut_positive(z), config, 0)
}

/// `Li_s(z)` at the default accuracy goal.
///
/// Returns `+inf` at the pole `z = 1`, `Re(s) <= 1`.
pub fn li(s: Complex64, z: Complex64) -> Result<Complex64> {
    polylog(s, z, &EvaluationConfig::default())?.checked()
}

fn dispatch(
    s: Complex64,
    z: Complex64,
    config: &EvaluationConfig,
    depth: usize,
) -> Result<EvaluationResult> {
    match select_method(s, z, config) {
        MethodTag::SpecialCaseZ0 => Ok(EvaluationResult::leaf(
            Complex64::new(0.0, 0.0),
            MethodTag::SpecialCaseZ0,
            0,
            true,
        )),
        MethodTag::SpecialCaseZ1 => Ok(at_one(s)),
        MethodTag::Series1 => series1(s, z, config),
        MethodTag::Series2 => series2(s, z, config),
        MethodTag::Series3 => series3(s, z, config),
        MethodTag::Duplication => duplication_step(s, z, config, depth),
    }
}

fn at_one(s: Complex64) -> EvaluationResult {
    if s.re > 1.0 {
        let value = riemann_zeta(s).expect("Re(s) > 1 excludes the pole");
        EvaluationResult::leaf(value, MethodTag::SpecialCaseZ1, 0, true)
    } else {
        EvaluationResult {
            is_pole: true,
            ..EvaluationResult::leaf(
                Complex64::new(f64::INFINITY, 0.0),
                MethodTag::SpecialCaseZ1,
                0,
                true,
            )
        }
    }
}

/// One level of `Li_s(z) = 2^(s-1) (Li_s(sqrt z) + Li_s(-sqrt z))`, each
/// half re-entering the full domain selection at `depth + 1`.
pub fn duplication_step(
    s: Complex64,
    z: Complex64,
    config: &EvaluationConfig,
    depth: usize,
) -> Result<EvaluationResult> {
    if depth >= config.max_recursion_depth {
        return Err(PolylogError::RecursionLimit {
            limit: config.max_recursion_depth,
        });
    }
    let root = principal_sqrt(z);
    let plus = dispatch(s, root, config, depth + 1)?;
    let minus = dispatch(s, on_cut_positive(-root), config, depth + 1)?;
    let scale = ((s - 1.0) * LN_2).exp();
    Ok(EvaluationResult {
        value: scale * (plus.value + minus.value),
        method: MethodTag::Duplication,
        terms_used: plus.terms_used + minus.terms_used,
        recursion_depth: 1 + plus.recursion_depth.max(minus.recursion_depth),
        converged: plus.converged && minus.converged,
        is_pole: plus.is_pole || minus.is_pole,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn cfg() -> EvaluationConfig {
        EvaluationConfig::default()
    }

    #[test]
    fn config_validation() {
        assert!(EvaluationConfig::default().validate().is_ok());
        assert!(EvaluationConfig::with_goal(1e-17).is_err());
        assert!(EvaluationConfig::with_goal(1e-2).is_err());
        assert!(EvaluationConfig::with_goal(1e-16).is_ok());
        let mut bad = cfg();
        bad.series2_threshold = 0.49;
        assert!(bad.validate().is_err());
        let mut bad = cfg();
        bad.max_recursion_depth = 7;
        assert!(bad.validate().is_err());
        let mut bad = cfg();
        bad.taylor_order = 5;
        assert!(bad.validate().is_err());
    }

    #[test]
    fn select_method_examples() {
        assert_eq!(
            select_method(c(2.5, 0.0), c(0.1, 0.0), &cfg()),
            MethodTag::Series1
        );
        assert_eq!(
            select_method(c(2.5, 0.0), c(0.75, 0.0), &cfg()),
            MethodTag::Series2
        );
        assert_eq!(
            select_method(c(3.0, 0.0), c(0.75, 0.0), &cfg()),
            MethodTag::Series3
        );
        assert_eq!(
            select_method(c(2.5, 0.0), c(50.0, 0.0), &cfg()),
            MethodTag::Duplication
        );
        assert_eq!(
            select_method(c(2.5, 0.0), c(0.0, 0.0), &cfg()),
            MethodTag::SpecialCaseZ0
        );
        assert_eq!(
            select_method(c(2.5, 0.0), c(1.0, -0.0), &cfg()),
            MethodTag::SpecialCaseZ1
        );
    }

    #[test]
    fn integer_proximity_is_closed_and_complex() {
        let t2 = 1e-3;
        assert_eq!(near_positive_integer(c(3.0 + 0.999e-3, 0.0), t2), Some(3));
        assert_eq!(near_positive_integer(c(3.0, 1.01e-3), t2), None);
        assert_eq!(near_positive_integer(c(3.0 + 7e-4, 7e-4), t2), Some(3));
        assert_eq!(near_positive_integer(c(0.0, 0.0), t2), None);
        assert_eq!(near_positive_integer(c(1.0005, 0.0), t2), Some(1));
    }

    #[test]
    fn theta_examples() {
        assert_eq!(crandall_theta(c(2.0, 0.0)), 1);
        assert_eq!(crandall_theta(c(0.0, 1.0)), 0);
        assert_eq!(crandall_theta(c(-1.0, -1.0)), 1);
        assert_eq!(crandall_theta(c(0.5, 0.0)), 0);
    }

    #[test]
    fn polylog_examples() {
        let r = polylog(c(2.0, 0.0), c(1.0, 0.0), &cfg()).unwrap();
        assert_eq!(r.method, MethodTag::SpecialCaseZ1);
        assert!((r.value.re - 1.6449340668482264).abs() < 1e-15);

        let r = polylog(c(2.0, 0.0), c(2.0, 0.0), &cfg()).unwrap();
        let expected = c(PI * PI / 4.0, -PI * LN_2);
        assert!((r.value - expected).norm() < 1e-14 * expected.norm());

        let r = polylog(c(1.0, 0.0), c(0.5, 0.0), &cfg()).unwrap();
        assert!((r.value.re - LN_2).abs() < 1e-15);

        let r = polylog(c(-2.0, 0.0), c(0.0, 0.0), &cfg()).unwrap();
        assert_eq!(r.method, MethodTag::SpecialCaseZ0);
        assert_eq!(r.value, c(0.0, 0.0));
    }

    #[test]
    fn pole_at_one() {
        let r = polylog(c(1.0, 0.0), c(1.0, 0.0), &cfg()).unwrap();
        assert!(r.is_pole);
        assert_eq!(r.value.re, f64::INFINITY);
        assert_eq!(r.value.im, 0.0);
        let r = polylog(c(0.5, 3.0), c(1.0, 0.0), &cfg()).unwrap();
        assert!(r.is_pole);
        let r = polylog(c(1.5, 0.0), c(1.0, 0.0), &cfg()).unwrap();
        assert!(!r.is_pole);
    }

    #[test]
    fn negative_zero_is_on_cut() {
        let a = polylog(c(2.5, 0.3), c(3.0, 0.0), &cfg()).unwrap().value;
        let b = polylog(c(2.5, 0.3), c(3.0, -0.0), &cfg()).unwrap().value;
        assert_eq!(a, b);
    }

    #[test]
    fn duplication_examples() {
        let direct = polylog(c(2.0, 0.0), c(4.0, 0.0), &cfg()).unwrap();
        let step = duplication_step(c(2.0, 0.0), c(4.0, 0.0), &cfg(), 0).unwrap();
        let halves = 2.0
            * (polylog(c(2.0, 0.0), c(2.0, 0.0), &cfg()).unwrap().value
                + polylog(c(2.0, 0.0), c(-2.0, 0.0), &cfg()).unwrap().value);
        assert!((step.value - halves).norm() < 1e-13 * halves.norm());
        // mpmath: polylog(2, 4) = 2.0613094667773174 - 4.3551721806072043i
        let expected = c(2.0613094667773174, -4.3551721806072043);
        assert!((step.value - expected).norm() < 1e-12 * expected.norm());
        assert_eq!(
            direct.method,
            select_method(c(2.0, 0.0), c(4.0, 0.0), &cfg())
        );

        let limit = cfg().max_recursion_depth;
        assert_eq!(
            duplication_step(c(2.0, 0.0), c(4.0, 0.0), &cfg(), limit),
            Err(PolylogError::RecursionLimit { limit })
        );

        let r = polylog(c(2.5, 0.0), c(50.0, 0.0), &cfg()).unwrap();
        assert_eq!(r.method, MethodTag::Duplication);
        assert!(r.recursion_depth <= 2);
        assert_eq!(
            select_method(c(2.5, 0.0), principal_sqrt(c(50.0, 0.0)), &cfg()),
            MethodTag::Series2
        );
    }

    #[test]
    fn non_finite_inputs() {
        assert_eq!(
            polylog(c(f64::NAN, 0.0), c(0.5, 0.0), &cfg()),
            Err(PolylogError::NonFinite)
        );
        assert_eq!(
            polylog(c(1.0, 0.0), c(f64::INFINITY, 0.0), &cfg()),
            Err(PolylogError::NonFinite)
        );
    }

    #[test]
    fn huge_argument_terminates() {
        let r = polylog(c(1.5, -2.0), c(1e300, -1e300), &cfg()).unwrap();
        assert!(r.recursion_depth <= 12);
        assert!(r.value.re.is_finite() && r.value.im.is_finite());
    }

    #[test]
    fn sqrt_is_principal() {
        assert_eq!(principal_sqrt(c(4.0, 0.0)), c(2.0, 0.0));
        assert_eq!(principal_sqrt(c(-4.0, 0.0)), c(0.0, 2.0));
        assert_eq!(principal_sqrt(c(-4.0, -0.0)), c(0.0, 2.0));
        let w = c(-3.0, -4.0);
        let r = principal_sqrt(w);
        assert!((r * r - w).norm() < 1e-15);
        assert!(r.re > 0.0);
    }
}
