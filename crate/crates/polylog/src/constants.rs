//! Tabulated constants and integer-indexed sequences: Stieltjes constants,
//! harmonic numbers, Bernoulli numbers and Bernoulli polynomials.

use crate::error::{PolylogError, Result};
use crate::special;

/// Euler–Mascheroni constant, `gamma_0`.
pub const EULER_GAMMA: f64 = 0.577_215_664_901_532_860_606_512_090_082;

/// Highest Stieltjes index stored in the table.
pub const STIELTJES_MAX: usize = 10;

/// Stieltjes constants `gamma_0 ..= gamma_10` (OEIS A001620, A082633, A086279, ...).
#[allow(clippy::excessive_precision)]
const STIELTJES: [f64; STIELTJES_MAX + 1] = [
    0.577_215_664_901_532_860_606_512_090_082,
    -0.072_815_845_483_676_724_860_586_375_874_9,
    -0.009_690_363_192_872_318_484_530_386_035_21,
    0.002_053_834_420_303_345_866_160_046_542_75,
    0.002_325_370_065_467_300_057_468_170_177_53,
    0.000_793_323_817_301_062_701_753_334_877_444,
    -0.000_238_769_345_430_199_609_872_421_841_908,
    -0.000_527_289_567_057_751_046_074_097_505_479,
    -0.000_352_123_353_803_039_509_602_052_165_001,
    -0.000_034_394_774_418_088_048_177_914_623_798_2,
    0.000_205_332_814_909_064_794_683_722_289_237,
];

/// Returns the Stieltjes constant `gamma_j` for `0 <= j <= 10`.
pub fn stieltjes(j: usize) -> Result<f64> {
    STIELTJES
        .get(j)
        .copied()
        .ok_or(PolylogError::UnsupportedIndex {
            index: j,
            max: STIELTJES_MAX,
        })
}

/// A reduced fraction with positive denominator and 64-bit components.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct RationalNumber {
    numerator: i64,
    denominator: i64,
}

impl RationalNumber {
    /// Builds `numerator / denominator` in lowest terms. Fails on a zero
    /// denominator or if the normalised pair does not fit in `i64`.
    pub fn new(numerator: i64, denominator: i64) -> Result<Self> {
        if denominator == 0 {
            return Err(PolylogError::RationalOverflow("zero denominator"));
        }
        let (mut n, mut d) = (numerator as i128, denominator as i128);
        if d < 0 {
            n = -n;
            d = -d;
        }
        let g = gcd(n.unsigned_abs(), d as u128) as i128;
        if g > 1 {
            n /= g;
            d /= g;
        }
        let numerator =
            i64::try_from(n).map_err(|_| PolylogError::RationalOverflow("numerator"))?;
        let denominator =
            i64::try_from(d).map_err(|_| PolylogError::RationalOverflow("denominator"))?;
        Ok(Self {
            numerator,
            denominator,
        })
    }

    pub fn numerator(&self) -> i64 {
        self.numerator
    }

    pub fn denominator(&self) -> i64 {
        self.denominator
    }

    /// Correctly rounded binary64 value. Both components of every tabulated
    /// Bernoulli number are below 2^53, so the single division rounds once.
    pub fn to_f64(&self) -> f64 {
        self.numerator as f64 / self.denominator as f64
    }
}

fn gcd(mut a: u128, mut b: u128) -> u128 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

/// Highest index with an exact rational Bernoulli number.
pub const BERNOULLI_EXACT_MAX: usize = 34;

/// `B_0 ..= B_34` as (numerator, denominator), OEIS A027641 / A027642, with `B_1 = -1/2`.
const BERNOULLI: [(i64, i64); BERNOULLI_EXACT_MAX + 1] = [
    (1, 1),
    (-1, 2),
    (1, 6),
    (0, 1),
    (-1, 30),
    (0, 1),
    (1, 42),
    (0, 1),
    (-1, 30),
    (0, 1),
    (5, 66),
    (0, 1),
    (-691, 2730),
    (0, 1),
    (7, 6),
    (0, 1),
    (-3617, 510),
    (0, 1),
    (43867, 798),
    (0, 1),
    (-174611, 330),
    (0, 1),
    (854513, 138),
    (0, 1),
    (-236364091, 2730),
    (0, 1),
    (8553103, 6),
    (0, 1),
    (-23749461029, 870),
    (0, 1),
    (8615841276005, 14322),
    (0, 1),
    (-7709321041217, 510),
    (0, 1),
    (2577687858367, 6),
];

/// Bernoulli number with its exact form when available.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BernoulliValue {
    pub exact: Option<RationalNumber>,
    pub approx: f64,
}

/// `B_n` with the convention `B_1 = -1/2`.
///
/// Indices up to 34 come from the rational table; beyond that the value is
/// `-n * zeta(1 - n)`, which overflows to infinity for `n` around 260.
pub fn bernoulli_number(n: usize) -> BernoulliValue {
    if n <= BERNOULLI_EXACT_MAX {
        let (p, q) = BERNOULLI[n];
        let exact = RationalNumber::new(p, q).expect("table entries are reduced");
        return BernoulliValue {
            exact: Some(exact),
            approx: exact.to_f64(),
        };
    }
    let approx = if n % 2 == 1 {
        0.0
    } else {
        let z = special::riemann_zeta(crate::Complex64::new(1.0 - n as f64, 0.0))
            .expect("zeta is regular at negative integers");
        -(n as f64) * z.re
    };
    BernoulliValue {
        exact: None,
        approx,
    }
}

pub(crate) fn bernoulli_rational(n: usize) -> (i64, i64) {
    BERNOULLI[n]
}

/// Bernoulli polynomial `B_n(x)`.
///
/// Closed forms for `n <= 5`, the binomial recursion over the rational table
/// for `n <= 34` (evaluated with a compensated Horner scheme, the coefficients
/// are large and alternate in sign), and `-n * zeta(1 - n, x)` above that.
pub fn bernoulli_poly(n: usize, x: f64) -> Result<f64> {
    match n {
        0 => Ok(1.0),
        1 => Ok(x - 0.5),
        2 => Ok((x - 1.0) * x + 1.0 / 6.0),
        3 => Ok(((x - 1.5) * x + 0.5) * x),
        4 => Ok((((x - 2.0) * x + 1.0) * x) * x - 1.0 / 30.0),
        5 => Ok(((((x - 2.5) * x + 5.0 / 3.0) * x) * x - 1.0 / 6.0) * x),
        n if n <= BERNOULLI_EXACT_MAX => Ok(bernoulli_poly_recursion(n, x)),
        n => {
            if x <= 0.0 || x.is_nan() {
                return Err(PolylogError::HurwitzNeedsPositive(x));
            }
            Ok(-(n as f64) * special::hurwitz_zeta(1.0 - n as f64, x)?)
        }
    }
}

fn binomial(n: usize, k: usize) -> i128 {
    let k = k.min(n - k);
    let mut c: i128 = 1;
    for i in 0..k {
        c = c * (n - i) as i128 / (i + 1) as i128;
    }
    c
}

#[inline]
fn two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let bb = s - a;
    (s, (a - (s - bb)) + (b - bb))
}

#[inline]
fn two_prod(a: f64, b: f64) -> (f64, f64) {
    let p = a * b;
    (p, a.mul_add(b, -p))
}

/// Splits the rational `p / q` into an unevaluated pair `hi + lo`.
fn rational_pair(p: i128, q: i64) -> (f64, f64) {
    let qf = q as f64;
    let p_hi = p as f64;
    let p_lo = (p - p_hi as i128) as f64;
    let hi = p_hi / qf;
    let (m1, m2) = two_prod(hi, qf);
    let r = (p_hi - m1) - m2 + p_lo;
    (hi, r / qf)
}

/// `B_n(x) = sum_j C(n, j) B_{n-j} x^j`, compensated Horner evaluation.
fn bernoulli_poly_recursion(n: usize, x: f64) -> f64 {
    let coeff = |j: usize| {
        let (p, q) = BERNOULLI[n - j];
        rational_pair(binomial(n, j) * p as i128, q)
    };
    let (mut s, mut c) = coeff(n);
    for j in (0..n).rev() {
        let (a_hi, a_lo) = coeff(j);
        let (p, pi) = two_prod(s, x);
        let (sum, sigma) = two_sum(p, a_hi);
        s = sum;
        c = c.mul_add(x, pi + sigma + a_lo);
    }
    s + c
}

/// Direct/identity crossover for harmonic numbers.
pub const HARMONIC_DIRECT_MAX: u64 = 64;

/// Harmonic number `H_n = 1 + 1/2 + ... + 1/n`, with `H_0 = 0`.
pub fn harmonic(n: u64) -> f64 {
    if n <= HARMONIC_DIRECT_MAX {
        return (1..=n).fold(0.0, |acc, k| acc + 1.0 / k as f64);
    }
    special::polygamma(0, n as f64 + 1.0).expect("argument is positive") + EULER_GAMMA
}

/// Generalized harmonic number `H_{n,r} = sum_{k=1}^n k^-r`.
///
/// Above the crossover, `r > 1` uses `zeta(r) - zeta(r, n + 1)` and `r = 1`
/// defers to [`harmonic`]; other orders are summed directly.
pub fn generalized_harmonic(n: u64, r: f64) -> f64 {
    if r == 1.0 {
        return harmonic(n);
    }
    if n <= HARMONIC_DIRECT_MAX || r < 1.0 {
        return (1..=n).fold(0.0, |acc, k| acc + (k as f64).powf(-r));
    }
    let zeta = special::riemann_zeta(crate::Complex64::new(r, 0.0))
        .expect("r != 1")
        .re;
    let tail = special::hurwitz_zeta(r, n as f64 + 1.0).expect("q > 0 and r != 1");
    zeta - tail
}

/// `B_{2k} / (2k)!` for `k = 1 ..= EM_TERMS`, used by Euler–Maclaurin sums.
pub(crate) const EM_TERMS: usize = 40;

pub(crate) fn euler_maclaurin_coefficients() -> &'static [f64; EM_TERMS] {
    use std::sync::OnceLock;
    static TABLE: OnceLock<[f64; EM_TERMS]> = OnceLock::new();
    TABLE.get_or_init(|| {
        let mut out = [0.0; EM_TERMS];
        let two_pi = 2.0 * std::f64::consts::PI;
        for (i, slot) in out.iter_mut().enumerate() {
            let k = i + 1;
            let n = 2 * k;
            if n <= BERNOULLI_EXACT_MAX {
                let (p, q) = BERNOULLI[n];
                let mut v = p as f64 / q as f64;
                for m in 1..=n {
                    v /= m as f64;
                }
                *slot = v;
            } else {
                // B_{2k}/(2k)! = (-1)^{k+1} 2 zeta(2k) / (2 pi)^{2k}
                let zeta: f64 = (1..=8).rev().map(|m| (m as f64).powi(-(n as i32))).sum();
                let sign = if k % 2 == 1 { 1.0 } else { -1.0 };
                *slot = sign * 2.0 * zeta * two_pi.powi(-(n as i32));
            }
        }
        out
    })
}
