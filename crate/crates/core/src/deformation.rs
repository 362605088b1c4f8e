//! Deformed Heisenberg algebra parameters.
//!
//! The algebra `[X_i, P_j] = i hbar (delta_ij (1 + beta P^2) + beta' P_i P_j)`
//! carries two nonnegative parameters (atomic units: inverse squared momentum).
//! They imply a minimal length `dx_min = hbar sqrt(beta + beta')` and an
//! auxiliary regularization length `b = hbar sqrt(2 beta - beta')`; positions
//! commute exactly when `2 beta = beta'` (`eta = 1/3`), which makes `b = 0`.

use crate::error::{Error, Result};
use crate::scalar::Real;

/// Smallest admissible `eta = beta / (beta + beta')`; below it the position
/// commutator would require `2 beta < beta'`.
pub const ETA_MIN: f64 = 1.0 / 3.0;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DeformationParameters<R> {
    beta: R,
    beta_prime: R,
}

impl<R: Real> DeformationParameters<R> {
    /// Requires `beta >= 0`, `beta' >= 0` and `2 beta >= beta'` (real `b`).
    pub fn new(beta: R, beta_prime: R) -> Result<Self> {
        if !beta.is_finite() || beta < R::zero() {
            return Err(Error::Domain {
                name: "beta",
                value: beta.to_f64().unwrap_or(f64::NAN),
                domain: "[0, inf)",
            });
        }
        if !beta_prime.is_finite() || beta_prime < R::zero() {
            return Err(Error::Domain {
                name: "beta_prime",
                value: beta_prime.to_f64().unwrap_or(f64::NAN),
                domain: "[0, inf)",
            });
        }
        let params = Self { beta, beta_prime };
        if R::of(2.0) * beta - beta_prime < -params.commutator_tolerance() {
            return Err(Error::Domain {
                name: "beta_prime",
                value: beta_prime.to_f64().unwrap_or(f64::NAN),
                domain: "[0, 2 beta]",
            });
        }
        Ok(params)
    }

    /// Splits a minimal length into `(beta, beta') = dx^2 (eta, 1 - eta)`
    /// (atomic units, `hbar = 1`). `eta` must lie in `[1/3, 1]`.
    pub fn from_minimal_length(delta_x_min: R, eta: R) -> Result<Self> {
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
        let dx2 = delta_x_min * delta_x_min;
        Self::new(dx2 * eta, dx2 * (R::one() - eta))
    }

    pub fn zero() -> Self {
        Self {
            beta: R::zero(),
            beta_prime: R::zero(),
        }
    }

    pub fn beta(&self) -> R {
        self.beta
    }

    pub fn beta_prime(&self) -> R {
        self.beta_prime
    }

    /// `hbar sqrt(beta + beta')`, atomic units.
    pub fn minimal_length(&self) -> R {
        (self.beta + self.beta_prime).sqrt()
    }

    /// `eta = beta / (beta + beta')`; undefined for the zero deformation.
    pub fn eta(&self) -> Result<R> {
        let total = self.beta + self.beta_prime;
        if total == R::zero() {
            return Err(Error::UndefinedParameter);
        }
        Ok(self.beta / total)
    }

    /// `b^2 = hbar^2 (2 beta - beta')` in atomic units, clamped to exact
    /// zero within a few ulps so the commutative case `eta = 1/3` stays
    /// structurally commutative after the rounding in `eta -> (beta, beta')`.
    pub fn b_squared(&self) -> R {
        let d = R::of(2.0) * self.beta - self.beta_prime;
        if d.abs() <= self.commutator_tolerance() {
            R::zero()
        } else {
            d
        }
    }

    /// Regularization length `b = hbar sqrt(2 beta - beta')`.
    pub fn b_parameter(&self) -> R {
        self.b_squared().sqrt()
    }

    /// Positions commute (`2 beta = beta'`).
    pub fn is_commutative(&self) -> bool {
        self.b_squared() == R::zero()
    }

    fn commutator_tolerance(&self) -> R {
        R::of(32.0) * R::epsilon() * (self.beta + self.beta_prime)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn minimal_length_round_trip() {
        let p = DeformationParameters::<f64>::from_minimal_length(1.8897e-6, 0.7).unwrap();
        assert_relative_eq!(p.minimal_length(), 1.8897e-6, max_relative = 1e-14);
        assert_relative_eq!(p.eta().unwrap(), 0.7, max_relative = 1e-14);
    }

    #[test]
    fn commutative_case_has_zero_b() {
        let p = DeformationParameters::<f64>::from_minimal_length(2.5e-6, 1.0 / 3.0).unwrap();
        assert_eq!(p.b_parameter(), 0.0);
        assert!(p.is_commutative());
    }

    #[test]
    fn b_matches_minimal_length_at_two_thirds() {
        // eta = 2/3 gives 2 beta - beta' = beta + beta'.
        let dx = 3.1e-6;
        let p = DeformationParameters::<f64>::from_minimal_length(dx, 2.0 / 3.0).unwrap();
        assert_relative_eq!(p.b_parameter(), dx, max_relative = 1e-14);
    }

    #[test]
    fn eta_domain_enforced() {
        assert!(DeformationParameters::<f64>::from_minimal_length(1e-6, 0.2).is_err());
        assert!(DeformationParameters::<f64>::from_minimal_length(1e-6, 1.1).is_err());
        assert!(DeformationParameters::<f64>::from_minimal_length(-1e-6, 0.5).is_err());
    }

    #[test]
    fn direct_construction_guards() {
        assert!(DeformationParameters::<f64>::new(-1.0, 0.0).is_err());
        assert!(DeformationParameters::<f64>::new(0.0, -1.0).is_err());
        // beta' > 2 beta means an imaginary b.
        assert!(DeformationParameters::<f64>::new(1.0, 3.0).is_err());
        assert!(DeformationParameters::<f64>::new(1.0, 2.0).is_ok());
    }

    #[test]
    fn zero_deformation_eta_undefined() {
        let p = DeformationParameters::<f64>::zero();
        assert!(matches!(p.eta(), Err(Error::UndefinedParameter)));
        assert_eq!(p.minimal_length(), 0.0);
    }
}
