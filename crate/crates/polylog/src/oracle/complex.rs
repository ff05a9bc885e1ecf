//! Double-double complex arithmetic.

use super::dd::ExtendedReal;
use num_complex::Complex64;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub};

#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct ExtendedComplex {
    pub re: ExtendedReal,
    pub im: ExtendedReal,
}

impl ExtendedComplex {
    pub const ZERO: Self = Self {
        re: ExtendedReal::ZERO,
        im: ExtendedReal::ZERO,
    };
    pub const ONE: Self = Self {
        re: ExtendedReal::ONE,
        im: ExtendedReal::ZERO,
    };

    pub const fn new(re: ExtendedReal, im: ExtendedReal) -> Self {
        Self { re, im }
    }

    pub fn real(re: ExtendedReal) -> Self {
        Self::new(re, ExtendedReal::ZERO)
    }

    pub fn to_complex(self) -> Complex64 {
        Complex64::new(self.re.to_f64(), self.im.to_f64())
    }

    pub fn is_finite(self) -> bool {
        self.re.is_finite() && self.im.is_finite()
    }

    pub fn is_zero(self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn conj(self) -> Self {
        Self::new(self.re, -self.im)
    }

    pub fn norm_sqr(self) -> ExtendedReal {
        self.re.sqr() + self.im.sqr()
    }

    pub fn norm(self) -> ExtendedReal {
        let scale = self.re.hi.abs().max(self.im.hi.abs());
        if scale == 0.0 || !scale.is_finite() {
            return ExtendedReal::from(scale);
        }
        let k = scale.log2().floor() as i32;
        let r = self.re.scale_pow2(-k);
        let i = self.im.scale_pow2(-k);
        (r.sqr() + i.sqr()).sqrt().scale_pow2(k)
    }

    /// Leading-order magnitude, for stopping tests.
    pub fn approx_norm(self) -> f64 {
        self.re.hi.hypot(self.im.hi)
    }

    pub fn exp(self) -> Self {
        let m = self.re.exp();
        let (s, c) = self.im.sin_cos();
        Self::new(m * c, m * s)
    }

    /// Principal logarithm; a zero imaginary part of either sign counts as `+0`.
    pub fn ln(self) -> Self {
        Self::new(self.norm().ln(), ExtendedReal::atan2(self.im, self.re))
    }

    /// Principal power `self^w`.
    pub fn powc(self, w: Self) -> Self {
        (w * self.ln()).exp()
    }

    pub fn sqrt(self) -> Self {
        if self.is_zero() {
            return Self::ZERO;
        }
        let r = self.norm();
        let t = ((self.re.abs() + r).scale_pow2(-1)).sqrt();
        if self.re.hi >= 0.0 {
            Self::new(t, self.im / (t * 2.0))
        } else {
            let im = if self.im.hi < 0.0 { -t } else { t };
            Self::new(self.im.abs() / (t * 2.0), im)
        }
    }

    /// `(sin pi w, cos pi w)`.
    pub fn sin_cos_pi(self) -> (Self, Self) {
        let (s, c) = self.re.sin_cos_pi();
        let (sh, ch) = (ExtendedReal::PI * self.im).sinh_cosh();
        (Self::new(s * ch, c * sh), Self::new(c * ch, -(s * sh)))
    }
}

impl From<Complex64> for ExtendedComplex {
    fn from(z: Complex64) -> Self {
        Self::new(ExtendedReal::from(z.re), ExtendedReal::from(z.im))
    }
}

impl From<ExtendedReal> for ExtendedComplex {
    fn from(x: ExtendedReal) -> Self {
        Self::real(x)
    }
}

impl From<f64> for ExtendedComplex {
    fn from(x: f64) -> Self {
        Self::real(ExtendedReal::from(x))
    }
}

impl Neg for ExtendedComplex {
    type Output = Self;
    fn neg(self) -> Self {
        Self::new(-self.re, -self.im)
    }
}

impl Add for ExtendedComplex {
    type Output = Self;
    fn add(self, b: Self) -> Self {
        Self::new(self.re + b.re, self.im + b.im)
    }
}

impl Sub for ExtendedComplex {
    type Output = Self;
    fn sub(self, b: Self) -> Self {
        Self::new(self.re - b.re, self.im - b.im)
    }
}

impl Mul for ExtendedComplex {
    type Output = Self;
    fn mul(self, b: Self) -> Self {
        Self::new(
            self.re * b.re - self.im * b.im,
            self.re * b.im + self.im * b.re,
        )
    }
}

impl Div for ExtendedComplex {
    type Output = Self;
    fn div(self, b: Self) -> Self {
        let k = b.re.hi.abs().max(b.im.hi.abs()).log2().floor() as i32;
        let bs = Self::new(b.re.scale_pow2(-k), b.im.scale_pow2(-k));
        let d = bs.norm_sqr();
        let n = self * bs.conj();
        Self::new((n.re / d).scale_pow2(-k), (n.im / d).scale_pow2(-k))
    }
}

impl Add<ExtendedReal> for ExtendedComplex {
    type Output = Self;
    fn add(self, b: ExtendedReal) -> Self {
        Self::new(self.re + b, self.im)
    }
}

impl Sub<ExtendedReal> for ExtendedComplex {
    type Output = Self;
    fn sub(self, b: ExtendedReal) -> Self {
        Self::new(self.re - b, self.im)
    }
}

impl Mul<ExtendedReal> for ExtendedComplex {
    type Output = Self;
    fn mul(self, b: ExtendedReal) -> Self {
        Self::new(self.re * b, self.im * b)
    }
}

impl Div<ExtendedReal> for ExtendedComplex {
    type Output = Self;
    fn div(self, b: ExtendedReal) -> Self {
        Self::new(self.re / b, self.im / b)
    }
}

impl Add<f64> for ExtendedComplex {
    type Output = Self;
    fn add(self, b: f64) -> Self {
        Self::new(self.re + b, self.im)
    }
}

impl Sub<f64> for ExtendedComplex {
    type Output = Self;
    fn sub(self, b: f64) -> Self {
        Self::new(self.re - b, self.im)
    }
}

impl Mul<f64> for ExtendedComplex {
    type Output = Self;
    fn mul(self, b: f64) -> Self {
        Self::new(self.re * b, self.im * b)
    }
}

impl Div<f64> for ExtendedComplex {
    type Output = Self;
    fn div(self, b: f64) -> Self {
        let b = ExtendedReal::from(b);
        Self::new(self.re / b, self.im / b)
    }
}

impl AddAssign for ExtendedComplex {
    fn add_assign(&mut self, b: Self) {
        *self = *self + b;
    }
}

impl MulAssign for ExtendedComplex {
    fn mul_assign(&mut self, b: Self) {
        *self = *self * b;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ec(re: f64, im: f64) -> ExtendedComplex {
        ExtendedComplex::from(Complex64::new(re, im))
    }

    fn err(a: ExtendedComplex, b: ExtendedComplex) -> f64 {
        (a - b).norm().to_f64() / b.norm().to_f64()
    }

    #[test]
    fn division_inverts_multiplication() {
        let a = ec(1.5, -2.25);
        let b = ec(-0.3, 7.0);
        assert!(err(a * b / b, a) < 1e-31);
    }

    #[test]
    fn exp_ln_round_trip() {
        for (re, im) in [(0.5, 0.5), (-3.0, 0.1), (2.0, -2.9)] {
            let w = ec(re, im);
            assert!(err(w.exp().ln(), w) < 1e-30, "{re} {im}");
        }
        let l = ec(-2.0, -0.0).ln();
        assert_eq!(l.im, ExtendedReal::PI);
    }

    #[test]
    fn sqrt_is_principal() {
        let w = ec(-3.0, -4.0);
        let r = w.sqrt();
        assert!(err(r * r, w) < 1e-31);
        assert!(r.re.hi > 0.0);
        assert_eq!(ec(-4.0, 0.0).sqrt().to_complex(), Complex64::new(0.0, 2.0));
    }

    #[test]
    fn complex_sin_cos_pi() {
        let w = ec(0.3, 0.7);
        let (s, c) = w.sin_cos_pi();
        assert!(err(s * s + c * c, ExtendedComplex::ONE) < 1e-30);
        let z = Complex64::new(0.3, 0.7) * std::f64::consts::PI;
        assert!((s.to_complex() - z.sin()).norm() < 1e-15);
    }
}
