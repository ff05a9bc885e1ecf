//! Trigonometric helpers with exact argument reduction for multiples of pi.

use num_complex::Complex64;
use std::f64::consts::PI;

/// `(sin(pi x), cos(pi x))`, exactly zero at the integer and half-integer roots.
pub(crate) fn sin_cos_pi(x: f64) -> (f64, f64) {
    if !x.is_finite() {
        return (f64::NAN, f64::NAN);
    }
    let r = x % 2.0;
    let n = (2.0 * r).round();
    let f = r - 0.5 * n;
    let (s, c) = if f == 0.0 {
        (0.0, 1.0)
    } else {
        (PI * f).sin_cos()
    };
    match (n as i64).rem_euclid(4) {
        0 => (s, c),
        1 => (c, -s),
        2 => (-s, -c),
        _ => (-c, s),
    }
}

/// `sin(pi w)` for complex `w`.
pub(crate) fn sin_pi(w: Complex64) -> Complex64 {
    let (s, c) = sin_cos_pi(w.re);
    let y = PI * w.im;
    Complex64::new(s * y.cosh(), c * y.sinh())
}

/// `cos(pi x)` for real `x`.
pub(crate) fn cos_pi(x: f64) -> f64 {
    sin_cos_pi(x).1
}

/// `exp(w) - 1` without cancellation for small `|w|`.
pub(crate) fn expm1(w: Complex64) -> Complex64 {
    let (s, c) = w.im.sin_cos();
    let half = (0.5 * w.im).sin();
    Complex64::new(w.re.exp_m1() * c - 2.0 * half * half, w.re.exp() * s)
}
