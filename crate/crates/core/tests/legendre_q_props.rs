use gegen_core::legendre_q::{legendre_q, q_from_rho, LegendreQParams};
use gegen_core::scalar::{c64, exp_i_pi, real, Complex64};
use gegen_core::TruncationPolicy;
use proptest::prelude::*;

fn rel(a: Complex64, b: Complex64) -> f64 {
    (a - b).norm() / b.norm()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(30))]

    #[test]
    fn rho_route_matches_direct_route(k in 0u64..=10, mu in 0.01..=3.0f64, nu in 0.01..=3.0f64, rho in 0.1..=0.8f64) {
        // z = (1+ρ²)/(2ρ) comes close to 1, where the 1/z² series needs many terms
        let policy = TruncationPolicy::default().with_max_terms(20_000);
        let z = (1.0 + rho * rho) / (2.0 * rho);
        let via_rho = q_from_rho(k, mu, real(nu), real(rho), &policy).unwrap();
        let params = LegendreQParams::new(real(k as f64 + mu - 0.5), real(nu - mu - 0.5), real(z));
        let direct = legendre_q(&params, &policy).unwrap();
        prop_assert!(via_rho.converged && direct.converged);
        prop_assert!(rel(via_rho.value, direct.value) < 1e-9, "k={} mu={} nu={} rho={} rel={}", k, mu, nu, rho, rel(via_rho.value, direct.value));
    }
}

proptest! {
    #[test]
    fn order_phase_carries_all_phase(nu in -0.45..4.0f64, mu in -2.0..2.0f64, z in 1.05..8.0f64) {
        let params = LegendreQParams::new(real(nu), real(mu), real(z));
        let q = legendre_q(&params, &TruncationPolicy::default().with_max_terms(5000)).unwrap();
        let rotated = q.value * exp_i_pi(real(-mu));
        prop_assert!(rotated.im.abs() <= 1e-11 * rotated.norm(), "nu={} mu={} z={} q={}", nu, mu, z, q.value);
    }

    #[test]
    fn terms_grow_as_z_approaches_one(nu in 0.1..3.0f64, mu in -1.0..2.0f64) {
        let policy = TruncationPolicy::default().with_max_terms(100_000);
        let mut previous = 0;
        for z in [5.0, 3.0, 2.0, 1.5, 1.25, 1.1, 1.05, 1.02] {
            let q = legendre_q(&LegendreQParams::new(real(nu), real(mu), real(z)), &policy).unwrap();
            prop_assert!(q.terms_used >= previous, "z={} terms={} previous={}", z, q.terms_used, previous);
            previous = q.terms_used;
        }
    }
}

#[test]
fn closed_form_anchor() {
    for z in [1.25, 2.0, 5.0] {
        let q = legendre_q(
            &LegendreQParams::new(real(-0.5), real(0.5), real(z)),
            &TruncationPolicy::default(),
        )
        .unwrap();
        let expected = c64(0.0, (std::f64::consts::PI / 2.0).sqrt() * (z * z - 1.0f64).powf(-0.25));
        assert!(rel(q.value, expected) < 1e-12);
    }
}
