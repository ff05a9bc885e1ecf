use polylog::oracle::{identity_residuals, negint_closed_form};
use polylog::special::complex_gamma;
use polylog::{li, polylog, select_method, Complex64, EvaluationConfig, MethodTag};
use proptest::prelude::*;
use std::f64::consts::PI;

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

fn engine(s: Complex64, z: Complex64) -> polylog::Result<Complex64> {
    li(s, z)
}

fn tight_engine(s: Complex64, z: Complex64) -> polylog::Result<Complex64> {
    let config = EvaluationConfig {
        accuracy_goal: 1e-14,
        ..EvaluationConfig::default()
    };
    polylog(s, z, &config)?.checked()
}

fn box16() -> impl Strategy<Value = Complex64> {
    (-8.0f64..8.0, -8.0f64..8.0).prop_map(|(re, im)| c(re, im))
}

fn disc(radius: f64) -> impl Strategy<Value = Complex64> {
    (0.0f64..=1.0, -PI..PI).prop_map(move |(r, t)| Complex64::from_polar(radius * r.sqrt(), t))
}

fn off_cut(z: Complex64) -> bool {
    !(z.re >= 1.0 && z.im.abs() < 1e-3)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn square_formula(s in box16(), z in disc(0.9)) {
        prop_assume!(z.norm() > 1e-3);
        prop_assume!(off_cut(z * z));
        // the identity amplifies truncation error by about 2^(Re s - 1) / |z|
        let r = identity_residuals(s, z * z, tight_engine);
        prop_assert!(r.square <= 1e-11, "s = {}, z = {}: {:e}", s, z, r.square);
    }

    #[test]
    fn conjugate_symmetry(s in box16(), z in disc(3.0)) {
        prop_assume!(z.im.abs() > 1e-6);
        let a = li(s.conj(), z.conj()).unwrap();
        let b = li(s, z).unwrap().conj();
        let ulp = |x: f64| 2.0 * f64::EPSILON * x.abs().max(f64::MIN_POSITIVE);
        prop_assert!((a.re - b.re).abs() <= ulp(b.re), "{} vs {}", a, b);
        prop_assert!((a.im - b.im).abs() <= ulp(b.im), "{} vs {}", a, b);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn negative_integer_reciprocal(n in 1usize..=8, r in 1.5f64..100.0, t in -PI..PI) {
        let z = Complex64::from_polar(r, t);
        prop_assume!(off_cut(z));
        let s = c(-(n as f64), 0.0);
        let res = identity_residuals(s, z, engine);
        prop_assert!(res.reciprocal_negint.unwrap() <= 1e-11, "n = {}, z = {}", n, z);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn negative_integer_closed_form(n in 0usize..=8, z in disc(0.9)) {
        let s = c(-(n as f64), 0.0);
        let got = li(s, z).unwrap();
        let want = negint_closed_form(n, z).unwrap();
        let err = (got - want).norm();
        prop_assert!(err <= 1e-11 * want.norm() || (want.norm() == 0.0 && err == 0.0),
            "n = {}, z = {}: {} vs {}", n, z, got, want);
    }
}

#[test]
fn branch_convention_on_the_cut() {
    for x in [1.5f64, 2.0, 4.0, 10.0] {
        for s in [1.5f64, 2.0, 2.5, 3.0] {
            let v = li(c(s, 0.0), c(x, 0.0)).unwrap();
            let jump = PI * x.ln().powf(s - 1.0) / complex_gamma(c(s, 0.0)).unwrap().re;
            assert!(v.im < 0.0, "s = {s}, x = {x}");
            assert!(
                (v.im + jump).abs() <= 1e-11 * v.im.abs(),
                "s = {s}, x = {x}: {v}"
            );
            assert_eq!(li(c(s, 0.0), c(x, -0.0)).unwrap(), v);
        }
    }
}

#[test]
fn upper_side_continuity() {
    let eps = 1e-9;
    for x in [1.5f64, 2.0, 4.0, 10.0] {
        for s in [1.5f64, 2.0, 2.5, 3.0] {
            let v = li(c(s, 0.0), c(x, eps)).unwrap();
            let jump = PI * x.ln().powf(s - 1.0) / complex_gamma(c(s, 0.0)).unwrap().re;
            assert!(
                (v.im - jump).abs() <= 100.0 * eps * x,
                "s = {s}, x = {x}: {v}"
            );
        }
    }
}

#[test]
fn unit_disc_needs_no_duplication() {
    let cfg = EvaluationConfig::default();
    let s = c(2.3, 0.7);
    for i in 0..=100 {
        for j in 0..=100 {
            let z = c(-1.0 + 0.02 * i as f64, -1.0 + 0.02 * j as f64);
            if z == c(0.0, 0.0) || z == c(1.0, 0.0) {
                continue;
            }
            assert_ne!(select_method(s, z, &cfg), MethodTag::Duplication, "z = {z}");
        }
    }
}

#[test]
fn duplication_reports_depth() {
    let r = polylog(c(2.0, 0.0), c(1e6, 1e6), &EvaluationConfig::default()).unwrap();
    assert_eq!(r.method, MethodTag::Duplication);
    assert!(r.recursion_depth >= 1);
    assert!(r.converged);
    let tight = EvaluationConfig {
        max_recursion_depth: 8,
        ..EvaluationConfig::default()
    };
    assert!(polylog(c(2.0, 0.0), c(1e300, 0.0), &tight).is_err());
}

#[test]
fn pole_at_one() {
    let r = polylog(c(0.5, 0.0), c(1.0, 0.0), &EvaluationConfig::default()).unwrap();
    assert!(r.is_pole);
    assert_eq!(r.value, c(f64::INFINITY, 0.0));
    let z2 = li(c(2.0, 0.0), c(1.0, 0.0)).unwrap();
    assert!((z2.re - PI * PI / 6.0).abs() < 1e-15);
}
