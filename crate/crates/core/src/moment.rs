//! Closed-form orbital magnetic moment, the relative deformation correction
//! `varsigma`, and the comparison against the weak-relativistic correction
//! and the Bohr-magneton measurement precision.
//!
//! The angular momentum is undeformed to first order, so `L_z = m` is used
//! as an identity throughout. In atomic units `mu_B = alpha / 2` and the
//! moment of an `(n, l, m)` eigenstate is
//!
//! `mu_z = -mu_B m (1 + 4 beta' <K> + 2 (2 beta - beta') <1/r>)`,
//!
//! which the virial theorem (`<1/r> = 2 <K> = 1/n^2`) collapses to the
//! one-parameter form `mu_z = -mu_B m (1 + 4 beta / n^2)`. Both routes are
//! implemented; tests hold them together.

use crate::deformation::{DeformationParameters, ETA_MIN};
use crate::error::{Error, Result};
use crate::hydrogen::{expectation_inv_r_power, mean_kinetic, QuantumNumbers};
use crate::scalar::Real;
use crate::units::{bohr_magneton_au, FINE_STRUCTURE};

/// Relative measurement error of the Bohr magneton used as the comparison
/// threshold for the deformation correction.
pub const BOHR_MAGNETON_RELATIVE_ERROR: f64 = 2.5e-8;

/// Moment of a state together with the corrections the moment is compared
/// against. All moments in atomic units unless named otherwise.
#[derive(Debug, Clone, Copy)]
pub struct MomentResult<R> {
    pub mu_z_au: R,
    pub mu_z_bohr_magnetons: R,
    /// `-m mu_B`.
    pub undeformed_au: R,
    /// Relative deformation correction; `mu_z = undeformed (1 + varsigma)`.
    pub varsigma: R,
    /// Magnitude `alpha^2 / (2 n^2)` of the weak-relativistic correction,
    /// which enters the moment with the opposite sign to `varsigma`.
    pub relativistic_fraction: R,
    pub varsigma_to_epsilon: R,
    pub below_measurement_precision: bool,
}

/// `-m mu_B`: the ordinary orbital moment.
pub fn undeformed_moment<R: Real>(m: i32) -> R {
    -bohr_magneton_au::<R>() * R::of_i32(m)
}

/// `|m| <= n - 1` so that some valid `l` exists for this `(n, m)`.
fn validate_n_m(n: u32, m: i32) -> Result<()> {
    if n < 1 || m.unsigned_abs() > n - 1 {
        return Err(Error::QuantumNumbers {
            n,
            l: n.saturating_sub(1),
            m,
        });
    }
    Ok(())
}

/// The relative correction `4 beta / n^2` shared by the closed moment and
/// the report, so the `mu_z = undeformed (1 + varsigma)` identity is exact.
fn deformation_fraction<R: Real>(n: u32, params: DeformationParameters<R>) -> R {
    R::of(4.0) * params.beta() / R::of_u32(n * n)
}

/// One-parameter closed form `mu_z = -mu_B m (1 + 4 beta / n^2)`.
pub fn magnetic_moment_closed<R: Real>(
    n: u32,
    m: i32,
    params: DeformationParameters<R>,
) -> Result<R> {
    validate_n_m(n, m)?;
    Ok(undeformed_moment::<R>(m) * (R::one() + deformation_fraction(n, params)))
}

/// Two-parameter form `mu_z = -mu_B m (1 + 4 beta' <K> + 2 (2 beta - beta') <1/r>)`
/// through the state expectations; agrees with the closed form by the virial
/// theorem.
pub fn magnetic_moment_general<R: Real>(
    n: u32,
    l: u32,
    m: i32,
    params: DeformationParameters<R>,
) -> Result<R> {
    QuantumNumbers::new(n, l, m)?;
    let kinetic = mean_kinetic::<R>(n);
    let inv_r = expectation_inv_r_power::<R>(n, l, 1)?;
    let correction =
        R::of(4.0) * params.beta_prime() * kinetic + R::of(2.0) * params.b_squared() * inv_r;
    Ok(undeformed_moment::<R>(m) * (R::one() + correction))
}

/// `varsigma(dx_min, eta, n) = eta 4 dx_min^2 / n^2` with `dx_min` in Bohr
/// radii: the relative moment correction at minimal length `dx_min` and
/// parameter ratio `eta = beta / (beta + beta')`.
pub fn varsigma<R: Real>(delta_x_min: R, eta: R, n: u32) -> Result<R> {
    if !delta_x_min.is_finite() || delta_x_min < R::zero() {
        return Err(Error::Domain {
            name: "delta_x_min",
            value: delta_x_min.to_f64().unwrap_or(f64::NAN),
            domain: "[0, inf)",
        });
    }
    if !(R::of(ETA_MIN)..=R::one()).contains(&eta) {
        return Err(Error::Domain {
            name: "eta",
            value: eta.to_f64().unwrap_or(f64::NAN),
            domain: "[1/3, 1]",
        });
    }
    if n < 2 {
        return Err(Error::Domain {
            name: "n",
            value: f64::from(n),
            domain: "[2, inf): a circulating state needs m != 0, hence l >= 1",
        });
    }
    Ok(eta * R::of(4.0) * delta_x_min * delta_x_min / R::of_u32(n * n))
}

/// Magnitude of the weak-relativistic moment correction, `alpha^2 / (2 n^2)`.
pub fn relativistic_fraction<R: Real>(n: u32) -> R {
    assert!(n >= 1, "n must be at least 1");
    let alpha = R::of(FINE_STRUCTURE);
    alpha * alpha / (R::of(2.0) * R::of_u32(n * n))
}

/// Weak-relativistic moment `mu_z = -mu_B m (1 - alpha^2 / (2 n^2))`: the
/// kinetic-energy correction reduces the magnitude, opposite in sign to the
/// deformation correction.
pub fn relativistic_moment<R: Real>(n: u32, m: i32) -> Result<R> {
    validate_n_m(n, m)?;
    Ok(undeformed_moment::<R>(m) * (R::one() - relativistic_fraction::<R>(n)))
}

/// Full comparison: deformed moment, relative corrections of both origins,
/// and the verdict against the measurement precision `epsilon_bohr`.
pub fn comparison_report<R: Real>(
    n: u32,
    m: i32,
    params: DeformationParameters<R>,
    epsilon_bohr: R,
) -> Result<MomentResult<R>> {
    validate_n_m(n, m)?;
    if !epsilon_bohr.is_finite() || epsilon_bohr <= R::zero() {
        return Err(Error::Domain {
            name: "epsilon_bohr",
            value: epsilon_bohr.to_f64().unwrap_or(f64::NAN),
            domain: "(0, inf)",
        });
    }
    let varsigma = deformation_fraction(n, params);
    let undeformed_au = undeformed_moment::<R>(m);
    let mu_z_au = undeformed_au * (R::one() + varsigma);
    let varsigma_to_epsilon = varsigma / epsilon_bohr;
    Ok(MomentResult {
        mu_z_au,
        mu_z_bohr_magnetons: mu_z_au / bohr_magneton_au::<R>(),
        undeformed_au,
        varsigma,
        relativistic_fraction: relativistic_fraction::<R>(n),
        varsigma_to_epsilon,
        below_measurement_precision: varsigma_to_epsilon < R::one(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::units::length_to_atomic;
    use approx::{assert_abs_diff_eq, assert_relative_eq};

    const DX_AU: f64 = 1.889_726_124_565_06e-6; // 1e-16 m

    #[test]
    fn undeformed_closed_moment_is_minus_bohr_magneton() {
        let mu = magnetic_moment_closed(2, 1, DeformationParameters::<f64>::zero()).unwrap();
        assert_eq!(mu, -bohr_magneton_au::<f64>());
    }

    #[test]
    fn closed_correction_is_linear_in_beta() {
        let p1 = DeformationParameters::new(1e-12_f64, 0.5e-12).unwrap();
        let p2 = DeformationParameters::new(2e-12_f64, 0.5e-12).unwrap();
        let und = undeformed_moment::<f64>(1);
        let c1 = magnetic_moment_closed(3, 1, p1).unwrap() / und - 1.0;
        let c2 = magnetic_moment_closed(3, 1, p2).unwrap() / und - 1.0;
        assert_relative_eq!(c2, 2.0 * c1, max_relative = 1e-12);
    }

    #[test]
    fn closed_moment_ignores_beta_prime() {
        let beta = 1e-12_f64;
        let reference =
            magnetic_moment_closed(2, 1, DeformationParameters::new(beta, 0.0).unwrap());
        for scale in [0.0_f64, 0.5, 1.0, 2.0] {
            let p = DeformationParameters::new(beta, scale * beta).unwrap();
            assert_eq!(magnetic_moment_closed(2, 1, p), reference);
        }
    }

    #[test]
    fn general_route_agrees_with_closed_route() {
        let params = DeformationParameters::<f64>::from_minimal_length(DX_AU, 0.7).unwrap();
        for (n, l, m) in [(2, 1, 1), (3, 1, -1), (3, 2, 2), (5, 4, 3), (4, 2, 1)] {
            let general = magnetic_moment_general(n, l, m, params).unwrap();
            let closed = magnetic_moment_closed(n, m, params).unwrap();
            assert_relative_eq!(general, closed, max_relative = 1e-14);
        }
    }

    #[test]
    fn headline_bound_at_physical_minimal_length() {
        let dx = length_to_atomic(1e-16_f64).unwrap();
        let value = varsigma(dx, 1.0, 2).unwrap();
        assert_relative_eq!(value, 3.571_064_4e-12, max_relative = 1e-7);
        assert!((value / 3.57e-12 - 1.0).abs() < 5e-3);
    }

    #[test]
    fn varsigma_commutative_endpoint() {
        let value = varsigma(DX_AU, 1.0 / 3.0, 2).unwrap();
        assert_relative_eq!(value, 1.190_354_8e-12, max_relative = 1e-7);
    }

    #[test]
    fn varsigma_scales_and_vanishes() {
        assert_eq!(varsigma(0.0_f64, 0.5, 3).unwrap(), 0.0);
        let v2 = varsigma(DX_AU, 1.0, 2).unwrap();
        let v4 = varsigma(DX_AU, 1.0, 4).unwrap();
        assert_relative_eq!(v4, v2 / 4.0, max_relative = 1e-14);
    }

    #[test]
    fn varsigma_domain_errors() {
        assert!(varsigma(DX_AU, 0.2, 2).is_err());
        assert!(varsigma(DX_AU, 1.1, 2).is_err());
        assert!(varsigma(-1.0, 0.5, 2).is_err());
        assert!(varsigma(DX_AU, 0.5, 1).is_err());
    }

    #[test]
    fn relativistic_fraction_at_n_two() {
        let f = relativistic_fraction::<f64>(2);
        assert_relative_eq!(
            f,
            FINE_STRUCTURE * FINE_STRUCTURE / 8.0,
            max_relative = 1e-15
        );
        assert!((f / 6.66e-6 - 1.0).abs() < 1e-3);
    }

    #[test]
    fn relativistic_correction_opposes_deformation() {
        let params = DeformationParameters::<f64>::from_minimal_length(DX_AU, 1.0).unwrap();
        for n in 2..=6 {
            let und = undeformed_moment::<f64>(1);
            let deformed = magnetic_moment_closed(n, 1, params).unwrap();
            let relativistic = relativistic_moment::<f64>(n, 1).unwrap();
            assert!((deformed - und) / und > 0.0);
            assert!((relativistic - und) / und < 0.0);
        }
    }

    #[test]
    fn report_matches_paper_ratio() {
        let params = DeformationParameters::<f64>::from_minimal_length(
            length_to_atomic(1e-16_f64).unwrap(),
            1.0,
        )
        .unwrap();
        let report = comparison_report(2, 1, params, BOHR_MAGNETON_RELATIVE_ERROR).unwrap();
        assert_relative_eq!(report.varsigma_to_epsilon, 1.428_4e-4, max_relative = 1e-4);
        assert!((report.varsigma_to_epsilon / 1.43e-4 - 1.0).abs() < 2e-3);
        assert!(report.below_measurement_precision);
    }

    #[test]
    fn report_identity_is_exact() {
        let params = DeformationParameters::<f64>::from_minimal_length(DX_AU, 0.6).unwrap();
        let report = comparison_report(3, 2, params, BOHR_MAGNETON_RELATIVE_ERROR).unwrap();
        assert_eq!(
            report.mu_z_au,
            report.undeformed_au * (1.0 + report.varsigma)
        );
        assert_abs_diff_eq!(
            report.mu_z_bohr_magnetons,
            -2.0 * (1.0 + report.varsigma),
            epsilon = 1e-15
        );
    }

    #[test]
    fn report_with_zero_parameters() {
        let report = comparison_report(
            2,
            1,
            DeformationParameters::<f64>::zero(),
            BOHR_MAGNETON_RELATIVE_ERROR,
        )
        .unwrap();
        assert_eq!(report.varsigma, 0.0);
        assert_eq!(report.varsigma_to_epsilon, 0.0);
        assert!(report.below_measurement_precision);
    }

    #[test]
    fn invalid_inputs_are_rejected() {
        let params = DeformationParameters::<f64>::zero();
        assert!(magnetic_moment_closed(1, 1, params).is_err());
        assert!(magnetic_moment_closed(0, 0, params).is_err());
        assert!(relativistic_moment::<f64>(2, 2).is_err());
        assert!(comparison_report(2, 1, params, 0.0).is_err());
    }
}
