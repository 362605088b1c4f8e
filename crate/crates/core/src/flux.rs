//! Probability and electric current density of stationary deformed states,
//! and the magnetic moment obtained by integrating over current tubes.
//!
//! For an eigenstate `psi_{nlm}` (first-order corrected or not) the radial
//! and polar current components vanish identically and the azimuthal one is
//!
//! `j_phi = m / (r sin(theta)) * [ |psi|^2
//!        + 4 beta' (E_n + 1/r) |psi|^2
//!        + 2 (2 beta - beta') |psi|^2 / r
//!        + 2 sum_{n' != n} c_{n'} R_{n'l} R_{nl} Theta_{lm}^2 / (2 pi) ]`
//!
//! in atomic units. The bracket is kept as four addends because the moment
//! integration needs them separately: the deformation pieces are ten to
//! twelve orders below the leading one and would drown in a single sum.
//!
//! The module computes probability flux; the electron charge `-1` enters
//! only when a current tube's moment is formed, so each stage stays
//! independently testable.

use crate::deformation::DeformationParameters;
use crate::error::{Error, Result};
use crate::hydrogen::{
    energy_level, radial_wavefunction, theta_amplitude, QuantumNumbers, RadialGrid, SphericalPoint,
};
use crate::perturbation::CorrectionExpansion;
use crate::quadrature::gauss_legendre;
use crate::scalar::{KahanSum, Real};
use crate::units::{bohr_magneton_au, speed_of_light_au};

/// Current density in spherical components.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FluxVector<R> {
    pub radial: R,
    pub polar: R,
    pub azimuthal: R,
}

impl<R: Real> FluxVector<R> {
    pub fn zero() -> Self {
        Self {
            radial: R::zero(),
            polar: R::zero(),
            azimuthal: R::zero(),
        }
    }

    pub fn magnitude(&self) -> R {
        (self.radial * self.radial + self.polar * self.polar + self.azimuthal * self.azimuthal)
            .sqrt()
    }
}

/// The four addends of the square bracket in `j_phi`, before the
/// `m / (r sin(theta))` prefactor.
#[derive(Debug, Clone, Copy)]
pub struct CurrentBracket<R> {
    /// `|psi|^2`; integrates to the undeformed moment.
    pub undeformed: R,
    /// `4 beta' (E_n + 1/r) |psi|^2`.
    pub kinetic: R,
    /// `2 (2 beta - beta') |psi|^2 / r`; exactly zero in the commutative case.
    pub coulomb: R,
    /// Interference of the base state with the admixed `n'` states.
    pub cross: R,
}

impl<R: Real> CurrentBracket<R> {
    pub fn total(&self) -> R {
        self.undeformed + self.kinetic + self.coulomb + self.cross
    }
}

fn check_expansion<R: Real>(
    q: QuantumNumbers,
    expansion: Option<&CorrectionExpansion<R>>,
) -> Result<()> {
    if let Some(expansion) = expansion {
        if expansion.base() != q {
            return Err(Error::Domain {
                name: "correction.base",
                value: f64::from(expansion.base().n()),
                domain: "the state the flux is evaluated for",
            });
        }
    }
    Ok(())
}

/// Bracket addends at `(r, cos(theta))`, independent of `phi` and of the
/// sign of `m`.
///
/// # Panics
/// On `r <= 0`, non-finite `r`, or `|cos_theta| > 1`.
pub fn current_bracket<R: Real>(
    q: QuantumNumbers,
    params: DeformationParameters<R>,
    correction: Option<&CorrectionExpansion<R>>,
    r: R,
    cos_theta: R,
) -> Result<CurrentBracket<R>> {
    assert!(r > R::zero() && r.is_finite(), "r must be positive");
    assert!(cos_theta.abs() <= R::one(), "cos_theta must be in [-1, 1]");
    check_expansion(q, correction)?;

    let m_abs = q.m().unsigned_abs();
    let theta = theta_amplitude(q.l(), m_abs, cos_theta);
    let radial = radial_wavefunction(q.n(), q.l(), r);
    let two_pi = R::of(2.0) * R::PI();
    let angular_density = theta * theta / two_pi;
    let density = radial * radial * angular_density;

    let four = R::of(4.0);
    let two = R::of(2.0);
    let kinetic = four * params.beta_prime() * (energy_level::<R>(q.n()) + R::one() / r) * density;
    let coulomb = two * params.b_squared() * density / r;
    let cross = match correction {
        Some(expansion) => {
            let mut admixed = R::zero();
            for (&n_prime, &c) in expansion.coefficients() {
                admixed += c * radial_wavefunction(n_prime, q.l(), r);
            }
            two * admixed * radial * angular_density
        }
        None => R::zero(),
    };

    Ok(CurrentBracket {
        undeformed: density,
        kinetic,
        coulomb,
        cross,
    })
}

/// Probability current density at a point. Zero for `m = 0`; otherwise purely
/// azimuthal.
///
/// Points too close to the polar axis or the origin are rejected rather than
/// evaluated: the prefactor division is numerically meaningless there even
/// though the limit of `j_phi` itself is finite.
pub fn probability_flux<R: Real>(
    q: QuantumNumbers,
    params: DeformationParameters<R>,
    correction: Option<&CorrectionExpansion<R>>,
    point: SphericalPoint<R>,
) -> Result<FluxVector<R>> {
    if q.m() == 0 {
        check_expansion(q, correction)?;
        return Ok(FluxVector::zero());
    }

    let sin_theta = point.theta.sin();
    if sin_theta < R::of(1e-12) {
        return Err(Error::CoordinateSingularity {
            sin_theta: sin_theta.to_f64().unwrap_or(f64::NAN),
        });
    }
    if point.r < R::of(1e-12) {
        return Err(Error::RadiusSingularity {
            r: point.r.to_f64().unwrap_or(f64::NAN),
        });
    }

    let bracket = current_bracket(q, params, correction, point.r, point.theta.cos())?;
    let azimuthal = R::of_i32(q.m()) / (point.r * sin_theta) * bracket.total();
    if !azimuthal.is_finite() {
        return Err(Error::NonFinite {
            at: "azimuthal current component",
        });
    }
    Ok(FluxVector {
        radial: R::zero(),
        polar: R::zero(),
        azimuthal,
    })
}

/// Electric current density: probability flux times the electron charge `-1`.
pub fn electric_current_flux<R: Real>(
    q: QuantumNumbers,
    params: DeformationParameters<R>,
    correction: Option<&CorrectionExpansion<R>>,
    point: SphericalPoint<R>,
) -> Result<FluxVector<R>> {
    let j = probability_flux(q, params, correction, point)?;
    Ok(FluxVector {
        radial: -j.radial,
        polar: -j.polar,
        azimuthal: -j.azimuthal,
    })
}

/// Central-difference estimate of `div j` in spherical coordinates.
///
/// Stationarity demands exactly zero; this evaluates the discretized
/// divergence honestly so a wrong component shape would show up.
pub fn divergence_check<R: Real>(
    q: QuantumNumbers,
    params: DeformationParameters<R>,
    correction: Option<&CorrectionExpansion<R>>,
    point: SphericalPoint<R>,
    step: R,
) -> Result<R> {
    if !step.is_finite() || step <= R::zero() {
        return Err(Error::Domain {
            name: "step",
            value: step.to_f64().unwrap_or(f64::NAN),
            domain: "(0, inf)",
        });
    }
    let SphericalPoint { r, theta, phi } = point;
    let h = step;

    let at = |r: R, theta: R, phi: R| -> Result<FluxVector<R>> {
        probability_flux(q, params, correction, SphericalPoint::new(r, theta, phi)?)
    };

    // (1/r^2) d/dr (r^2 j_r)
    let outer = at(r + h, theta, phi)?;
    let inner = at(r - h, theta, phi)?;
    let radial_term = ((r + h) * (r + h) * outer.radial - (r - h) * (r - h) * inner.radial)
        / (R::of(2.0) * h * r * r);

    // (1/(r sin)) d/dtheta (sin(theta) j_theta)
    let north = at(r, theta - h, phi)?;
    let south = at(r, theta + h, phi)?;
    let polar_term = ((theta + h).sin() * south.polar - (theta - h).sin() * north.polar)
        / (R::of(2.0) * h * r * theta.sin());

    // (1/(r sin)) d/dphi j_phi
    let east = at(r, theta, phi + h)?;
    let west = at(r, theta, phi - h)?;
    let azimuthal_term = (east.azimuthal - west.azimuthal) / (R::of(2.0) * h * r * theta.sin());

    Ok(radial_term + polar_term + azimuthal_term)
}

/// Discretization of the current-tube integral: a radial rule matched to the
/// state's exponential decay, a Gauss-Legendre rule in `cos(theta)`, and a
/// cap on node-doubling refinements.
#[derive(Debug, Clone)]
pub struct TubeQuadratureSpec<R> {
    radial: RadialGrid<R>,
    angular_nodes: Vec<R>,
    angular_weights: Vec<R>,
    refinement_levels: u32,
}

/// Default radial node count for tube integration.
pub const TUBE_RADIAL_NODES: usize = 200;
/// Default angular node count for tube integration.
pub const TUBE_ANGULAR_NODES: usize = 64;
/// Default number of node-doubling refinements before giving up.
pub const TUBE_REFINEMENT_LEVELS: u32 = 2;

impl<R: Real> TubeQuadratureSpec<R> {
    /// Both node counts must be at least 16 and at least one refinement
    /// level is required for the convergence estimate.
    pub fn new(
        radial: RadialGrid<R>,
        angular_count: usize,
        refinement_levels: u32,
    ) -> Result<Self> {
        if radial.nodes().len() < 16 {
            return Err(Error::Domain {
                name: "radial nodes",
                value: radial.nodes().len() as f64,
                domain: "[16, inf)",
            });
        }
        if angular_count < 16 {
            return Err(Error::Domain {
                name: "angular nodes",
                value: angular_count as f64,
                domain: "[16, inf)",
            });
        }
        if refinement_levels < 1 {
            return Err(Error::Domain {
                name: "refinement levels",
                value: f64::from(refinement_levels),
                domain: "[1, inf)",
            });
        }
        let (angular_nodes, angular_weights) = gauss_legendre(angular_count);
        Ok(Self {
            radial,
            angular_nodes,
            angular_weights,
            refinement_levels,
        })
    }

    pub fn for_state(
        n: u32,
        radial_count: usize,
        angular_count: usize,
        refinement_levels: u32,
    ) -> Result<Self> {
        Self::new(
            RadialGrid::for_state(n, radial_count),
            angular_count,
            refinement_levels,
        )
    }

    /// The defaults used by the command-line tools.
    pub fn standard(n: u32) -> Self {
        Self::for_state(
            n,
            TUBE_RADIAL_NODES,
            TUBE_ANGULAR_NODES,
            TUBE_REFINEMENT_LEVELS,
        )
        .expect("default node counts exceed the minimum")
    }

    pub fn radial(&self) -> &RadialGrid<R> {
        &self.radial
    }

    pub fn angular_count(&self) -> usize {
        self.angular_nodes.len()
    }

    pub fn refinement_levels(&self) -> u32 {
        self.refinement_levels
    }

    fn refined(&self) -> Self {
        let (angular_nodes, angular_weights) = gauss_legendre(2 * self.angular_nodes.len());
        Self {
            radial: self.radial.refined(),
            angular_nodes,
            angular_weights,
            refinement_levels: self.refinement_levels,
        }
    }
}

/// Tube-integrated moment split the same way as [`CurrentBracket`].
#[derive(Debug, Clone, Copy)]
pub struct MomentDecomposition<R> {
    pub undeformed: R,
    pub kinetic: R,
    pub coulomb: R,
    pub cross: R,
}

impl<R: Real> MomentDecomposition<R> {
    pub fn zero() -> Self {
        Self {
            undeformed: R::zero(),
            kinetic: R::zero(),
            coulomb: R::zero(),
            cross: R::zero(),
        }
    }

    pub fn total(&self) -> R {
        self.undeformed + self.kinetic + self.coulomb + self.cross
    }

    fn max_difference(&self, other: &Self) -> R {
        let d = [
            (self.undeformed - other.undeformed).abs(),
            (self.kinetic - other.kinetic).abs(),
            (self.coulomb - other.coulomb).abs(),
            (self.cross - other.cross).abs(),
        ];
        d.into_iter().fold(R::zero(), R::max)
    }
}

/// One pass of the tube integral
/// `mu_z = (pi/c) int j_phi_electric r^3 sin^2(theta) dr dtheta`
/// on the given rules. In `u = cos(theta)` each bracket piece contributes
/// `-(pi m / c) sum_ij w_r w_u r^2 B_piece(r, u)`.
fn tube_pass<R: Real>(
    q: QuantumNumbers,
    params: DeformationParameters<R>,
    correction: Option<&CorrectionExpansion<R>>,
    spec: &TubeQuadratureSpec<R>,
) -> Result<MomentDecomposition<R>> {
    let prefactor = -(R::PI() * R::of_i32(q.m()) / speed_of_light_au::<R>());
    let mut undeformed = KahanSum::default();
    let mut kinetic = KahanSum::default();
    let mut coulomb = KahanSum::default();
    let mut cross = KahanSum::default();

    for (&r, &wr) in spec.radial.nodes().iter().zip(spec.radial.weights()) {
        let radial_weight = wr * r * r;
        for (&u, &wu) in spec.angular_nodes.iter().zip(&spec.angular_weights) {
            let bracket = current_bracket(q, params, correction, r, u)?;
            let w = radial_weight * wu;
            undeformed.add(w * bracket.undeformed);
            kinetic.add(w * bracket.kinetic);
            coulomb.add(w * bracket.coulomb);
            cross.add(w * bracket.cross);
        }
    }

    let result = MomentDecomposition {
        undeformed: prefactor * undeformed.value(),
        kinetic: prefactor * kinetic.value(),
        coulomb: prefactor * coulomb.value(),
        cross: prefactor * cross.value(),
    };
    if !result.total().is_finite() {
        return Err(Error::NonFinite {
            at: "tube quadrature",
        });
    }
    Ok(result)
}

/// Moment from tube integration, refined by node doubling until every piece
/// is stable to `1e-10` Bohr magnetons.
pub fn moment_decomposition<R: Real>(
    q: QuantumNumbers,
    params: DeformationParameters<R>,
    correction: Option<&CorrectionExpansion<R>>,
    spec: &TubeQuadratureSpec<R>,
) -> Result<MomentDecomposition<R>> {
    check_expansion(q, correction)?;
    if q.m() == 0 {
        return Ok(MomentDecomposition::zero());
    }
    let tolerance = R::of(1e-10) * bohr_magneton_au::<R>();
    let mut current = spec.clone();
    let mut coarse = tube_pass(q, params, correction, &current)?;
    let mut estimate = R::nan();
    for _ in 0..spec.refinement_levels {
        let finer = current.refined();
        let fine = tube_pass(q, params, correction, &finer)?;
        estimate = fine.max_difference(&coarse);
        if estimate <= tolerance {
            return Ok(fine);
        }
        current = finer;
        coarse = fine;
    }
    Err(Error::Convergence {
        estimate: estimate.to_f64().unwrap_or(f64::NAN),
        levels: spec.refinement_levels,
    })
}

/// Total `mu_z` from tube integration, in atomic units.
pub fn magnetic_moment_numeric<R: Real>(
    q: QuantumNumbers,
    params: DeformationParameters<R>,
    correction: Option<&CorrectionExpansion<R>>,
    spec: &TubeQuadratureSpec<R>,
) -> Result<R> {
    Ok(moment_decomposition(q, params, correction, spec)?.total())
}

/// Isolated moment contribution of the wavefunction-correction cross term.
/// Radial orthogonality of same-`l` states makes it vanish; integrating it
/// verifies that instead of assuming it.
pub fn cross_term_moment<R: Real>(
    q: QuantumNumbers,
    params: DeformationParameters<R>,
    correction: &CorrectionExpansion<R>,
    spec: &TubeQuadratureSpec<R>,
) -> Result<R> {
    if correction.coefficients().is_empty() {
        check_expansion(q, Some(correction))?;
        return Ok(R::zero());
    }
    Ok(moment_decomposition(q, params, Some(correction), spec)?.cross)
}
