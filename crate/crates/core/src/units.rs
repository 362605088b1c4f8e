//! Physical constants and unit conversions.
//!
//! All internal physics runs in Hartree atomic units (`hbar = M = e = 1`,
//! lengths in Bohr radii, energies in Hartree). CGS-Gaussian values appear
//! only here, at the input/output boundary. Constants are CODATA 2018.

use crate::error::{Error, Result};
use crate::scalar::Real;

/// Fine-structure constant (dimensionless).
pub const FINE_STRUCTURE: f64 = 7.297_352_569_3e-3;

/// Bohr radius in meters.
pub const BOHR_RADIUS_M: f64 = 5.291_772_109_03e-11;

/// Hartree energy in erg.
pub const HARTREE_ERG: f64 = 4.359_744_722_207_1e-11;

/// CGS-Gaussian constants backing the conversions.
#[derive(Debug, Clone, PartialEq)]
pub struct Constants<R> {
    /// Elementary charge, statC.
    pub electron_charge: R,
    /// Electron mass, g.
    pub electron_mass: R,
    /// Reduced Planck constant, erg s.
    pub hbar: R,
    /// Speed of light, cm/s.
    pub speed_of_light: R,
    /// Bohr radius, cm.
    pub bohr_radius: R,
    /// Fine-structure constant.
    pub fine_structure: R,
    /// Bohr magneton, erg/G.
    pub bohr_magneton: R,
}

impl<R: Real> Constants<R> {
    pub fn cgs() -> Self {
        Self {
            electron_charge: R::of(4.803_204_712_57e-10),
            electron_mass: R::of(9.109_383_701_5e-28),
            hbar: R::of(1.054_571_817e-27),
            speed_of_light: R::of(2.997_924_58e10),
            bohr_radius: R::of(5.291_772_109_03e-9),
            fine_structure: R::of(FINE_STRUCTURE),
            bohr_magneton: R::of(9.274_010_078_3e-21),
        }
    }

    /// `a = hbar^2 / (M e^2)`, as stored vs derived.
    pub fn derived_bohr_radius(&self) -> R {
        self.hbar * self.hbar / (self.electron_mass * self.electron_charge * self.electron_charge)
    }

    /// `alpha = e^2 / (hbar c)`, as stored vs derived.
    pub fn derived_fine_structure(&self) -> R {
        self.electron_charge * self.electron_charge / (self.hbar * self.speed_of_light)
    }

    /// `mu_B = e hbar / (2 M c)`, as stored vs derived.
    pub fn derived_bohr_magneton(&self) -> R {
        self.electron_charge * self.hbar / (R::of(2.0) * self.electron_mass * self.speed_of_light)
    }
}

/// Bohr magneton in atomic units: `e hbar / (2 M c) = alpha / 2`.
pub fn bohr_magneton_au<R: Real>() -> R {
    R::of(FINE_STRUCTURE) / R::of(2.0)
}

/// Speed of light in atomic units, `1 / alpha`.
pub fn speed_of_light_au<R: Real>() -> R {
    R::one() / R::of(FINE_STRUCTURE)
}

/// Length in meters to Bohr radii. Rejects negative input.
pub fn length_to_atomic<R: Real>(meters: R) -> Result<R> {
    if !meters.is_finite() || meters < R::zero() {
        return Err(Error::Domain {
            name: "length",
            value: meters.to_f64().unwrap_or(f64::NAN),
            domain: "[0, inf)",
        });
    }
    Ok(meters / R::of(BOHR_RADIUS_M))
}

/// Length in Bohr radii to centimeters.
pub fn length_atomic_to_cm<R: Real>(atomic: R) -> R {
    atomic * R::of(BOHR_RADIUS_M * 100.0)
}

/// Length in centimeters to Bohr radii.
pub fn length_cm_to_atomic<R: Real>(cm: R) -> R {
    cm / R::of(BOHR_RADIUS_M * 100.0)
}

/// Energy in Hartree to erg.
pub fn energy_atomic_to_erg<R: Real>(hartree: R) -> R {
    hartree * R::of(HARTREE_ERG)
}

/// Energy in erg to Hartree.
pub fn energy_erg_to_atomic<R: Real>(erg: R) -> R {
    erg / R::of(HARTREE_ERG)
}

/// Magnetic moment in atomic units to erg/G.
pub fn moment_atomic_to_cgs<R: Real>(atomic: R) -> R {
    atomic * moment_unit_cgs()
}

/// Magnetic moment in erg/G to atomic units.
pub fn moment_cgs_to_atomic<R: Real>(cgs: R) -> R {
    cgs / moment_unit_cgs()
}

/// Magnetic moment in atomic units expressed in Bohr magnetons.
pub fn moment_to_bohr_magnetons<R: Real>(atomic: R) -> R {
    atomic / bohr_magneton_au::<R>()
}

/// One atomic unit of magnetic moment in erg/G, fixed by the Bohr magneton.
fn moment_unit_cgs<R: Real>() -> R {
    R::of(9.274_010_078_3e-21) / bohr_magneton_au::<R>()
}
