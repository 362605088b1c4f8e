//! Random-input invariants: unit round trips, parameter reconstruction,
//! component nullity of the current, and monotonicity of the moment
//! correction.

use proptest::prelude::*;

use minlen_core::deformation::DeformationParameters;
use minlen_core::flux::probability_flux;
use minlen_core::hydrogen::{QuantumNumbers, SphericalPoint};
use minlen_core::moment::{magnetic_moment_closed, magnetic_moment_general, varsigma};
use minlen_core::units::{
    energy_atomic_to_erg, energy_erg_to_atomic, length_atomic_to_cm, length_cm_to_atomic,
    moment_atomic_to_cgs, moment_cgs_to_atomic,
};

fn valid_state() -> impl Strategy<Value = QuantumNumbers> {
    (1u32..=6)
        .prop_flat_map(|n| (Just(n), 0..n))
        .prop_flat_map(|(n, l)| (Just(n), Just(l), -(l as i32)..=(l as i32)))
        .prop_map(|(n, l, m)| QuantumNumbers::new(n, l, m).unwrap())
}

fn physical_parameters() -> impl Strategy<Value = DeformationParameters<f64>> {
    (1e-8f64..1e-3, 1.0f64 / 3.0..=1.0)
        .prop_map(|(dx, eta)| DeformationParameters::from_minimal_length(dx, eta).unwrap())
}

proptest! {
    #[test]
    fn unit_conversions_round_trip(value in 1e-10f64..1e10) {
        prop_assert!((length_cm_to_atomic(length_atomic_to_cm(value)) / value - 1.0).abs() < 1e-12);
        prop_assert!((energy_erg_to_atomic(energy_atomic_to_erg(value)) / value - 1.0).abs() < 1e-12);
        prop_assert!((moment_cgs_to_atomic(moment_atomic_to_cgs(value)) / value - 1.0).abs() < 1e-12);
    }

    #[test]
    fn deformation_parameters_reconstruct_their_inputs(
        dx in 1e-10f64..1e-2,
        eta in 1.0f64 / 3.0..=1.0,
    ) {
        let params = DeformationParameters::from_minimal_length(dx, eta).unwrap();
        prop_assert!((params.minimal_length() / dx - 1.0).abs() < 1e-13);
        prop_assert!((params.eta().unwrap() - eta).abs() < 1e-13);
        prop_assert!(params.b_squared() >= 0.0);
        prop_assert_eq!(params.is_commutative(), params.b_squared() == 0.0);
    }

    #[test]
    fn current_has_no_radial_or_polar_component(
        q in valid_state(),
        params in physical_parameters(),
        r in 0.1f64..25.0,
        theta in 0.1f64..3.0,
        phi in 0.0f64..std::f64::consts::TAU,
    ) {
        let point = SphericalPoint::new(r, theta, phi).unwrap();
        let j = probability_flux(q, params, None, point).unwrap();
        prop_assert_eq!(j.radial, 0.0);
        prop_assert_eq!(j.polar, 0.0);
        if q.m() == 0 {
            prop_assert_eq!(j.azimuthal, 0.0);
        }
    }

    #[test]
    fn varsigma_is_monotone(
        dx in 1e-8f64..1e-3,
        eta_low in 1.0f64 / 3.0..0.99,
        bump in 0.001f64..0.3,
        n in 2u32..=9,
    ) {
        let eta_high = (eta_low + bump).min(1.0);
        let low = varsigma(dx, eta_low, n).unwrap();
        let high = varsigma(dx, eta_high, n).unwrap();
        prop_assert!(high > low);
        let next = varsigma(dx, eta_low, n + 1).unwrap();
        prop_assert!(next < low);
    }

    #[test]
    fn moment_routes_agree_and_scale_with_m(
        q in valid_state(),
        params in physical_parameters(),
    ) {
        let general = magnetic_moment_general(q.n(), q.l(), q.m(), params).unwrap();
        let closed = magnetic_moment_closed(q.n(), q.m(), params).unwrap();
        if q.m() == 0 {
            prop_assert_eq!(general, 0.0);
            prop_assert_eq!(closed, 0.0);
        } else {
            prop_assert!((general / closed - 1.0).abs() < 1e-14);
            // mu_z / m is independent of m at fixed n.
            let per_unit = closed / f64::from(q.m());
            let reference = magnetic_moment_closed(q.n(), 1, params).unwrap();
            prop_assert!((per_unit / reference - 1.0).abs() < 1e-14);
        }
    }

    #[test]
    fn invalid_quantum_numbers_are_rejected(n in 1u32..=6, l in 0u32..8, m in -8i32..=8) {
        let valid = l < n && m.unsigned_abs() <= l;
        prop_assert_eq!(QuantumNumbers::new(n, l, m).is_ok(), valid);
    }
}
