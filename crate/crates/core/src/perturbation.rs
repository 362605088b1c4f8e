//! First-order perturbation theory for the deformed hydrogen Hamiltonian.
//!
//! The deformation adds, at first order in `(beta, beta')`,
//! `V = beta' p^4 / 2 - (1/sqrt(r^2 + b^2) - 1/r) + (b^2/4)(p^2/r + p^2/r h.c.)`
//! style terms (atomic units). Acting on Coulomb eigenstates, `p^2` collapses
//! through the eigenvalue identity `p^2 psi = 2 (E_n + 1/r) psi`, which reduces
//! every matrix element to radial integrals of `1/r`, `1/r^2` and the
//! regularized Coulomb difference. Elements are diagonal in `l` and
//! independent of `m`, so states are labelled by `(n, n', l)` here.
//!
//! The regularized difference `<1/r - 1/sqrt(r^2+b^2)>` is integrated as
//! `b^2 / (r s (r + s))`, `s = sqrt(r^2 + b^2)`; the naive subtraction loses
//! every significant digit at physical `b ~ 1e-6`.

use std::collections::BTreeMap;

use num_complex::Complex;

use crate::deformation::DeformationParameters;
use crate::error::{Error, Result};
use crate::hydrogen::{
    energy_level, expectation_inv_r_power, radial_wavefunction, wavefunction, QuantumNumbers,
    RadialGrid, SphericalPoint,
};
use crate::scalar::Real;

/// Absolute convergence target for a single radial matrix element.
pub const ELEMENT_TOLERANCE: f64 = 1e-10;

const MAX_REFINEMENTS: u32 = 3;

/// One off-diagonal (or diagonal) element `V_{n n'}` at fixed `l`.
#[derive(Debug, Clone)]
pub struct MatrixElementRequest<'a, R> {
    pub n: u32,
    pub n_prime: u32,
    pub l: u32,
    pub params: DeformationParameters<R>,
    pub grid: &'a RadialGrid<R>,
}

/// First-order wavefunction correction: coefficients `c_{n'}` of the
/// admixed states `psi_{n' l m}`, keyed by `n'`.
#[derive(Debug, Clone)]
pub struct CorrectionExpansion<R> {
    base: QuantumNumbers,
    coefficients: BTreeMap<u32, R>,
}

impl<R: Real> CorrectionExpansion<R> {
    /// Expansion with no admixtures; the corrected state is the bare state.
    pub fn empty(base: QuantumNumbers) -> Self {
        Self {
            base,
            coefficients: BTreeMap::new(),
        }
    }

    pub fn base(&self) -> QuantumNumbers {
        self.base
    }

    pub fn coefficients(&self) -> &BTreeMap<u32, R> {
        &self.coefficients
    }

    /// Sum of squared coefficients; the norm of the corrected state is
    /// `sqrt(1 + this)` by orthonormality.
    pub fn squared_norm_excess(&self) -> R {
        self.coefficients
            .values()
            .fold(R::zero(), |acc, c| acc + *c * *c)
    }
}

/// Radial element `<n' l | f(r) | n l>` refined until two consecutive node
/// doublings agree to `ELEMENT_TOLERANCE`.
fn refined_radial_element<R: Real>(
    n: u32,
    n_prime: u32,
    l: u32,
    grid: &RadialGrid<R>,
    f: impl Fn(R) -> R,
) -> Result<R> {
    let integrand =
        |r: R| radial_wavefunction(n_prime, l, r) * radial_wavefunction(n, l, r) * r * r * f(r);
    let mut grid = grid.clone();
    let mut coarse = grid.quadrature(integrand)?;
    for _ in 0..MAX_REFINEMENTS {
        let finer = grid.refined();
        let fine = finer.quadrature(integrand)?;
        let estimate = (fine - coarse).abs();
        if estimate < R::of(ELEMENT_TOLERANCE) {
            return Ok(fine);
        }
        grid = finer;
        coarse = fine;
    }
    Err(Error::Convergence {
        estimate: (coarse).abs().to_f64().unwrap_or(f64::NAN),
        levels: MAX_REFINEMENTS,
    })
}

/// Quadrature of `<n' l | 1/sqrt(r^2 + b^2) | n l>`.
pub fn regularized_coulomb_element<R: Real>(
    n: u32,
    n_prime: u32,
    l: u32,
    b: R,
    grid: &RadialGrid<R>,
) -> Result<R> {
    validate_pair(n, n_prime, l)?;
    if !b.is_finite() || b < R::zero() {
        return Err(Error::Domain {
            name: "b",
            value: b.to_f64().unwrap_or(f64::NAN),
            domain: "[0, inf)",
        });
    }
    refined_radial_element(n, n_prime, l, grid, |r| R::one() / (r * r + b * b).sqrt())
}

/// Matrix element `V_{n n'}` of the deformation perturbation:
///
/// `V_{nn'} = <1/r - 1/sqrt(r^2+b^2)>
///          + (1/2)(2 beta + 3 beta')(E_n + E_n') <1/r>
///          + (2 beta + beta') <1/r^2>`
///
/// with all brackets between `R_{n'l}` and `R_{nl}` (atomic units). Symmetric
/// in `n <-> n'` and homogeneous of degree one in the parameters up to the
/// `O(b^4)` remainder of the regularized term.
pub fn matrix_element_v<R: Real>(request: &MatrixElementRequest<'_, R>) -> Result<R> {
    let MatrixElementRequest {
        n,
        n_prime,
        l,
        params,
        grid,
    } = *request;
    validate_pair(n, n_prime, l)?;

    let b2 = params.b_squared();
    let difference = if b2 == R::zero() {
        R::zero()
    } else {
        refined_radial_element(n, n_prime, l, grid, |r| {
            let s = (r * r + b2).sqrt();
            b2 / (r * s * (r + s))
        })?
    };

    let inv_r = refined_radial_element(n, n_prime, l, grid, |r| R::one() / r)?;
    let inv_r2 = refined_radial_element(n, n_prime, l, grid, |r| R::one() / (r * r))?;

    let e_sum = energy_level::<R>(n) + energy_level::<R>(n_prime);
    let half = R::of(0.5);
    let kinetic_coeff = half * (R::of(2.0) * params.beta() + R::of(3.0) * params.beta_prime());
    let quad_coeff = R::of(2.0) * params.beta() + params.beta_prime();

    Ok(difference + kinetic_coeff * e_sum * inv_r + quad_coeff * inv_r2)
}

/// First-order energy shift from the expanded operator, valid for `l >= 1`:
///
/// `dE = 2 beta' (E^2 + 2 E <1/r> + <1/r^2>)
///     + (2 beta - beta') (E <1/r> + <1/r^2> + <1/r^3>/2)`.
pub fn first_order_energy_shift<R: Real>(
    n: u32,
    l: u32,
    params: DeformationParameters<R>,
) -> Result<R> {
    if n < 1 || l > n - 1 {
        return Err(Error::QuantumNumbers { n, l, m: 0 });
    }
    if l == 0 {
        return Err(Error::DivergentExpectation);
    }
    let e = energy_level::<R>(n);
    let inv_r = expectation_inv_r_power::<R>(n, l, 1)?;
    let inv_r2 = expectation_inv_r_power::<R>(n, l, 2)?;
    let inv_r3 = expectation_inv_r_power::<R>(n, l, 3)?;
    let two = R::of(2.0);
    let kinetic = two * params.beta_prime() * (e * e + two * e * inv_r + inv_r2);
    let coulomb = params.b_squared() * (e * inv_r + inv_r2 + inv_r3 / two);
    Ok(kinetic + coulomb)
}

/// Coefficients `c_{n'} = V_{n n'} / (E_n - E_{n'})` for the bound-state
/// admixtures `n' = l+1 .. n_max`, `n' != n`. Each pair gets a grid matched
/// to its joint exponential decay, with `grid_nodes` nodes before refinement.
///
/// Restricted to `l >= 1` like the energy shift: the corrected wavefunction
/// feeds the current, which s states do not carry anyway.
pub fn correction_expansion<R: Real>(
    base: QuantumNumbers,
    params: DeformationParameters<R>,
    n_max: u32,
    grid_nodes: usize,
) -> Result<CorrectionExpansion<R>> {
    if base.l() == 0 {
        return Err(Error::DivergentExpectation);
    }
    if n_max <= base.n() {
        return Err(Error::Domain {
            name: "n_max",
            value: f64::from(n_max),
            domain: "(n, inf)",
        });
    }
    let mut coefficients = BTreeMap::new();
    for n_prime in (base.l() + 1)..=n_max {
        if n_prime == base.n() {
            continue;
        }
        let grid = RadialGrid::for_pair(base.n(), n_prime, grid_nodes);
        let element = matrix_element_v(&MatrixElementRequest {
            n: base.n(),
            n_prime,
            l: base.l(),
            params,
            grid: &grid,
        })?;
        let denominator = energy_level::<R>(base.n()) - energy_level::<R>(n_prime);
        coefficients.insert(n_prime, element / denominator);
    }
    Ok(CorrectionExpansion { base, coefficients })
}

/// First-order corrected wavefunction
/// `psi + sum_{n'} c_{n'} psi_{n' l m}` at a point.
pub fn corrected_wavefunction<R: Real>(
    expansion: &CorrectionExpansion<R>,
    point: SphericalPoint<R>,
) -> Result<Complex<R>> {
    let base = expansion.base;
    let mut psi = wavefunction(base, point)?;
    for (&n_prime, &c) in &expansion.coefficients {
        let admixed = QuantumNumbers::new(n_prime, base.l(), base.m())?;
        psi = psi + wavefunction(admixed, point)? * c;
    }
    Ok(psi)
}

fn validate_pair(n: u32, n_prime: u32, l: u32) -> Result<()> {
    if n < 1 || l > n - 1 {
        return Err(Error::QuantumNumbers { n, l, m: 0 });
    }
    if n_prime < 1 || l > n_prime - 1 {
        return Err(Error::QuantumNumbers {
            n: n_prime,
            l,
            m: 0,
        });
    }
    Ok(())
}
