use gegen_core::hypergeometric::{gauss_2f1, quadratic_transform_2f1, series_3f2_unit, watson_sum};
use gegen_core::scalar::{c64, real, Complex64};
use gegen_core::TruncationPolicy;
use proptest::prelude::*;

fn rel(a: Complex64, b: Complex64) -> f64 {
    (a - b).norm() / b.norm()
}

/// Real parameter kept at least 0.05 away from the non-positive integers.
fn param() -> impl Strategy<Value = f64> {
    (-2.5..2.5f64).prop_filter("near a pole", |a| *a > 0.05 || (a - a.round()).abs() > 0.05)
}

/// |z| ≤ 0.7 with the transformed argument 4z/(1+z)² inside |w| ≤ 0.9.
fn quadratic_point() -> impl Strategy<Value = Complex64> {
    (0.0..0.7f64, -std::f64::consts::PI..std::f64::consts::PI)
        .prop_map(|(r, t)| Complex64::from_polar(r, t))
        .prop_filter("transformed argument too large", |z| {
            (4.0 * z / ((1.0 + z) * (1.0 + z))).norm() <= 0.9
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(50))]

    #[test]
    fn quadratic_transformation(a in param(), b in param(), z in quadratic_point()) {
        let c = a - b + 1.0;
        prop_assume!(c > 0.05 || (c - c.round()).abs() > 0.05);
        let policy = TruncationPolicy::default();
        let direct = gauss_2f1(real(a), real(b), real(c), z, &policy).unwrap();
        let transformed = quadratic_transform_2f1(real(a), real(b), z, &policy).unwrap();
        prop_assert!(direct.converged && transformed.converged);
        prop_assert!(rel(transformed.value, direct.value) < 1e-10, "a={a} b={b} z={z} rel={}", rel(transformed.value, direct.value));
    }

    #[test]
    fn gauss_symmetric_in_numerator_parameters(a in param(), b in param(), c in param(), re in -0.9..0.9f64, im in -0.4..0.4f64) {
        let z = c64(re, im);
        prop_assume!(z.norm() < 0.95);
        let policy = TruncationPolicy::default();
        let ab = gauss_2f1(real(a), real(b), real(c), z, &policy).unwrap().value;
        let ba = gauss_2f1(real(b), real(a), real(c), z, &policy).unwrap().value;
        prop_assert!((ab - ba).norm() <= 1e-14 * ab.norm());
    }

    #[test]
    fn monotone_tail(a in 0.1..4.0f64, b in 0.1..4.0f64, c in 0.1..4.0f64, z in 0.01..0.9f64) {
        let policy = TruncationPolicy::default();
        let eval = gauss_2f1(real(a), real(b), real(c), real(z), &policy).unwrap();
        prop_assert!(eval.converged && eval.terms_used < policy.max_terms);
        // term ratio (a+n)(b+n)z / ((c+n)(n+1)) drops below 1 for good after some index
        let ratio = |n: f64| (a + n) * (b + n) * z / ((c + n) * (n + 1.0));
        let start = (0..10_000).rev().find(|&n| ratio(n as f64) >= 1.0).map_or(0, |n| n + 1);
        prop_assert!((start..start + 2000).all(|n| ratio(n as f64) < 1.0));
        prop_assert!(start < eval.terms_used);
    }
}

fn watson_case() -> impl Strategy<Value = (f64, f64, f64)> {
    (-0.45..2.5f64, -0.45..2.5f64, 2.5..5.0f64).prop_map(|(a, b, excess)| (a, b, (a + b) / 2.0 - 0.5 + excess))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(20))]

    #[test]
    fn watson_matches_direct_summation((a, b, c) in watson_case()) {
        let policy = TruncationPolicy::default().with_max_terms(2_000_000);
        let closed = watson_sum(real(a), real(b), real(c)).unwrap();
        let series = series_3f2_unit(real(a), real(b), real(c), real((a + b + 1.0) / 2.0), real(2.0 * c), &policy).unwrap();
        prop_assert!(series.converged);
        prop_assert!(rel(series.value, closed) < 1e-10, "a={a} b={b} c={c}");
    }

    #[test]
    fn watson_matches_terminating_sum(m in 1u32..=8, b in 0.1..3.0f64, lift in 0.2..3.0f64) {
        let a = -(m as f64);
        let c = ((b - a) / 2.0 + lift).max(0.15);
        let closed = watson_sum(real(a), real(b), real(c)).unwrap();
        let series = series_3f2_unit(real(a), real(b), real(c), real((a + b + 1.0) / 2.0), real(2.0 * c), &TruncationPolicy::default()).unwrap();
        if m % 2 == 1 {
            // Γ((a+1)/2) has a pole: the sum vanishes
            prop_assert_eq!(closed, real(0.0));
            prop_assert!(series.value.norm() < 1e-12, "m={} b={} c={} sum={}", m, b, c, series.value);
        } else {
            prop_assert!(rel(series.value, closed) < 1e-10, "m={} b={} c={}", m, b, c);
        }
    }
}
