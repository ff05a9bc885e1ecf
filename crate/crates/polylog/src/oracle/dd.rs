//! Double-double real arithmetic.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};

/// Unevaluated sum `hi + lo` with `|lo| <= ulp(hi) / 2`, about 31 significant digits.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct ExtendedReal {
    pub hi: f64,
    pub lo: f64,
}

#[inline]
fn two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let bb = s - a;
    (s, (a - (s - bb)) + (b - bb))
}

#[inline]
fn quick_two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    (s, b - (s - a))
}

#[inline]
fn two_prod(a: f64, b: f64) -> (f64, f64) {
    let p = a * b;
    (p, a.mul_add(b, -p))
}

const EXP_TAYLOR_TERMS: usize = 10;
const EXP_SQUARINGS: i32 = 10;
const TRIG_TAYLOR_TERMS: usize = 30;

impl ExtendedReal {
    pub const ZERO: Self = Self { hi: 0.0, lo: 0.0 };
    pub const ONE: Self = Self { hi: 1.0, lo: 0.0 };
    pub const PI: Self = Self {
        hi: std::f64::consts::PI,
        lo: 1.2246467991473532e-16,
    };
    pub const LN_2: Self = Self {
        hi: std::f64::consts::LN_2,
        lo: 2.3190468138462996e-17,
    };
    /// `ln(2 pi) / 2`
    pub const HALF_LN_TWO_PI: Self = Self {
        hi: 0.9189385332046728,
        lo: -3.8782941580672414e-17,
    };

    pub const fn new(hi: f64, lo: f64) -> Self {
        Self { hi, lo }
    }

    /// Normalizes an arbitrary pair.
    pub fn from_pair(a: f64, b: f64) -> Self {
        let (hi, lo) = two_sum(a, b);
        Self { hi, lo }
    }

    /// `num / den` rounded to double-double.
    pub fn from_ratio(num: i64, den: i64) -> Self {
        Self::from(num as f64) / Self::from(den as f64)
    }

    pub fn to_f64(self) -> f64 {
        self.hi + self.lo
    }

    pub fn is_finite(self) -> bool {
        self.hi.is_finite() && self.lo.is_finite()
    }

    pub fn is_zero(self) -> bool {
        self.hi == 0.0
    }

    pub fn abs(self) -> Self {
        if self.hi < 0.0 || (self.hi == 0.0 && self.lo < 0.0) {
            -self
        } else {
            self
        }
    }

    /// Multiplication by an exact power of two.
    pub fn scale_pow2(self, k: i32) -> Self {
        let half = k / 2;
        let a = 2f64.powi(half);
        let b = 2f64.powi(k - half);
        Self::new(self.hi * a * b, self.lo * a * b)
    }

    pub fn recip(self) -> Self {
        Self::ONE / self
    }

    pub fn sqr(self) -> Self {
        self * self
    }

    pub fn powi(self, n: i32) -> Self {
        let mut base = if n < 0 { self.recip() } else { self };
        let mut e = n.unsigned_abs();
        let mut acc = Self::ONE;
        while e > 0 {
            if e & 1 == 1 {
                acc *= base;
            }
            base = base.sqr();
            e >>= 1;
        }
        acc
    }

    pub fn sqrt(self) -> Self {
        if self.hi <= 0.0 {
            return Self::from(self.hi.sqrt());
        }
        let x = self.hi.sqrt();
        let (p, e) = two_prod(x, x);
        let r = self - Self::new(p, e);
        Self::from(x) + Self::from(r.hi / (2.0 * x))
    }

    pub fn exp(self) -> Self {
        if self.hi > 709.8 {
            return Self::from(f64::INFINITY);
        }
        if self.hi < -745.2 {
            return Self::ZERO;
        }
        let k = (self.hi / Self::LN_2.hi).round();
        let r = (self - Self::LN_2 * k).scale_pow2(-EXP_SQUARINGS);
        // expm1(r) by Taylor, then expm1(2x) = expm1(x) (expm1(x) + 2)
        let mut term = r;
        let mut sum = r;
        for i in 2..=EXP_TAYLOR_TERMS {
            term = term * r / i as f64;
            sum += term;
        }
        for _ in 0..EXP_SQUARINGS {
            sum = sum * (sum + 2.0);
        }
        (sum + 1.0).scale_pow2(k as i32)
    }

    /// Natural logarithm of a positive value.
    pub fn ln(self) -> Self {
        if self.hi <= 0.0 {
            return Self::from(if self.hi == 0.0 {
                f64::NEG_INFINITY
            } else {
                f64::NAN
            });
        }
        if self.hi.is_infinite() {
            return self;
        }
        let y = Self::from(self.hi.ln());
        y + self * (-y).exp() - 1.0
    }

    /// `(sin x, cos x)` for `|x|` up to about `1e4`.
    pub fn sin_cos(self) -> (Self, Self) {
        let half_pi = Self::PI.scale_pow2(-1);
        let k = (self.hi / half_pi.hi).round();
        let r = self - half_pi * k;
        let r2 = r.sqr();
        let mut s_term = r;
        let mut sin = r;
        let mut c_term = Self::ONE;
        let mut cos = Self::ONE;
        for i in 1..TRIG_TAYLOR_TERMS {
            let n = (2 * i) as f64;
            c_term = -(c_term * r2) / (n * (n - 1.0));
            s_term = -(s_term * r2) / (n * (n + 1.0));
            cos += c_term;
            sin += s_term;
            if c_term.hi.abs() < 1e-36 && s_term.hi.abs() < 1e-36 {
                break;
            }
        }
        match (k as i64).rem_euclid(4) {
            0 => (sin, cos),
            1 => (cos, -sin),
            2 => (-sin, -cos),
            _ => (-cos, sin),
        }
    }

    /// `(sin pi x, cos pi x)` with the argument reduced modulo 2 exactly.
    pub fn sin_cos_pi(self) -> (Self, Self) {
        let k = self.hi.round();
        let r = self - k;
        let (s, c) = (Self::PI * r).sin_cos();
        if k.rem_euclid(2.0) == 0.0 {
            (s, c)
        } else {
            (-s, -c)
        }
    }

    /// `(sinh x, cosh x)`.
    pub fn sinh_cosh(self) -> (Self, Self) {
        if self.hi.abs() < 0.5 {
            let x2 = self.sqr();
            let mut term = self;
            let mut sinh = self;
            for i in 1..TRIG_TAYLOR_TERMS {
                let n = (2 * i) as f64;
                term = term * x2 / (n * (n + 1.0));
                sinh += term;
                if term.hi.abs() < 1e-36 {
                    break;
                }
            }
            let cosh = (Self::ONE + sinh.sqr()).sqrt();
            return (sinh, cosh);
        }
        let e = self.exp();
        let inv = e.recip();
        ((e - inv).scale_pow2(-1), (e + inv).scale_pow2(-1))
    }

    /// Four-quadrant arctangent in `(-pi, pi]`; a zero `y` of either sign counts as `+0`.
    pub fn atan2(y: Self, x: Self) -> Self {
        if y.is_zero() {
            if x.hi < 0.0 {
                return Self::PI;
            }
            return Self::ZERO;
        }
        if x.is_zero() {
            let half_pi = Self::PI.scale_pow2(-1);
            return if y.hi > 0.0 { half_pi } else { -half_pi };
        }
        let mut a = Self::from(y.hi.atan2(x.hi));
        for _ in 0..2 {
            let (s, c) = a.sin_cos();
            a += (y * c - x * s) / (x * c + y * s);
        }
        a
    }
}

impl From<f64> for ExtendedReal {
    fn from(v: f64) -> Self {
        Self { hi: v, lo: 0.0 }
    }
}

impl fmt::Display for ExtendedReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:e} + {:e}", self.hi, self.lo)
    }
}

impl PartialOrd for ExtendedReal {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        match self.hi.partial_cmp(&other.hi)? {
            Ordering::Equal => self.lo.partial_cmp(&other.lo),
            ord => Some(ord),
        }
    }
}

impl Neg for ExtendedReal {
    type Output = Self;
    fn neg(self) -> Self {
        Self::new(-self.hi, -self.lo)
    }
}

impl Add for ExtendedReal {
    type Output = Self;
    fn add(self, b: Self) -> Self {
        let (s1, s2) = two_sum(self.hi, b.hi);
        let (t1, t2) = two_sum(self.lo, b.lo);
        let (s1, s2) = quick_two_sum(s1, s2 + t1);
        let (hi, lo) = quick_two_sum(s1, s2 + t2);
        Self { hi, lo }
    }
}

impl Sub for ExtendedReal {
    type Output = Self;
    fn sub(self, b: Self) -> Self {
        self + (-b)
    }
}

impl Mul for ExtendedReal {
    type Output = Self;
    fn mul(self, b: Self) -> Self {
        let (p1, p2) = two_prod(self.hi, b.hi);
        let p2 = p2 + (self.hi * b.lo + self.lo * b.hi);
        let (hi, lo) = quick_two_sum(p1, p2);
        Self { hi, lo }
    }
}

impl Div for ExtendedReal {
    type Output = Self;
    fn div(self, b: Self) -> Self {
        let q1 = self.hi / b.hi;
        if !q1.is_finite() {
            return Self::from(q1);
        }
        let r = self - b * q1;
        let q2 = r.hi / b.hi;
        let r = r - b * q2;
        let q3 = r.hi / b.hi;
        let (hi, lo) = quick_two_sum(q1, q2);
        Self { hi, lo } + q3
    }
}

impl Add<f64> for ExtendedReal {
    type Output = Self;
    fn add(self, b: f64) -> Self {
        self + Self::from(b)
    }
}

impl Sub<f64> for ExtendedReal {
    type Output = Self;
    fn sub(self, b: f64) -> Self {
        self - Self::from(b)
    }
}

impl Mul<f64> for ExtendedReal {
    type Output = Self;
    fn mul(self, b: f64) -> Self {
        let (p1, p2) = two_prod(self.hi, b);
        let (hi, lo) = quick_two_sum(p1, p2 + self.lo * b);
        Self { hi, lo }
    }
}

impl Div<f64> for ExtendedReal {
    type Output = Self;
    fn div(self, b: f64) -> Self {
        self / Self::from(b)
    }
}

impl AddAssign for ExtendedReal {
    fn add_assign(&mut self, b: Self) {
        *self = *self + b;
    }
}

impl SubAssign for ExtendedReal {
    fn sub_assign(&mut self, b: Self) {
        *self = *self - b;
    }
}

impl MulAssign for ExtendedReal {
    fn mul_assign(&mut self, b: Self) {
        *self = *self * b;
    }
}
