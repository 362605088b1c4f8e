//! Undeformed hydrogen bound states in atomic units.
//!
//! Everything downstream perturbs around these: normalized radial functions
//! `R_nl`, fully normalized spherical harmonics (Condon-Shortley phase),
//! closed-form expectation values of `r^-k`, and a Gauss-Laguerre radial grid
//! whose weight is matched to the exponential decay `e^{-2r/n}` of the target
//! state, so that every polynomial-times-exponential radial integrand is
//! integrated exactly up to rounding. The grid doubles as the brute-force
//! oracle for all closed forms.

use num_complex::Complex;

use crate::error::{Error, Result};
use crate::quadrature::gauss_laguerre_flattened;
use crate::scalar::{KahanSum, Real};
use crate::special::{assoc_laguerre, assoc_legendre};

/// Validated bound-state labels: `n >= 1`, `l <= n - 1`, `|m| <= l`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct QuantumNumbers {
    n: u32,
    l: u32,
    m: i32,
}

impl QuantumNumbers {
    pub fn new(n: u32, l: u32, m: i32) -> Result<Self> {
        if n < 1 || l > n - 1 || m.unsigned_abs() > l {
            return Err(Error::QuantumNumbers { n, l, m });
        }
        Ok(Self { n, l, m })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn l(&self) -> u32 {
        self.l
    }

    pub fn m(&self) -> i32 {
        self.m
    }
}

/// Point in spherical coordinates, atomic units.
///
/// The radius must be positive and the angle strictly interior, so the
/// coordinate frame itself is nonsingular; the flux evaluators apply their
/// own, stricter guards.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SphericalPoint<R> {
    pub r: R,
    pub theta: R,
    pub phi: R,
}

impl<R: Real> SphericalPoint<R> {
    pub fn new(r: R, theta: R, phi: R) -> Result<Self> {
        if !r.is_finite() || r <= R::zero() {
            return Err(Error::RadiusSingularity {
                r: r.to_f64().unwrap_or(f64::NAN),
            });
        }
        if !theta.is_finite() || theta <= R::zero() || theta >= R::PI() {
            return Err(Error::Domain {
                name: "theta",
                value: theta.to_f64().unwrap_or(f64::NAN),
                domain: "(0, pi)",
            });
        }
        if !phi.is_finite() {
            return Err(Error::Domain {
                name: "phi",
                value: phi.to_f64().unwrap_or(f64::NAN),
                domain: "finite",
            });
        }
        Ok(Self { r, theta, phi })
    }
}

/// Radial quadrature grid: `sum weights[i] f(nodes[i])` approximates
/// `int_0^inf f(r) dr` for integrands decaying like `e^{-scale r}`.
#[derive(Debug, Clone, PartialEq)]
pub struct RadialGrid<R> {
    nodes: Vec<R>,
    weights: Vec<R>,
    scale: R,
    requested: usize,
}

impl<R: Real> RadialGrid<R> {
    /// Rule with `count` nodes for integrands decaying like `e^{-scale r}`.
    pub fn new(count: usize, scale: R) -> Self {
        assert!(count >= 4, "radial grid needs at least 4 nodes");
        assert!(scale > R::zero(), "decay scale must be positive");
        let (x, flattened) = gauss_laguerre_flattened::<R>(count, 0);
        let nodes: Vec<R> = x.iter().map(|&xi| xi / scale).collect();
        let weights: Vec<R> = flattened.iter().map(|&wi| wi / scale).collect();
        debug_assert!(nodes.windows(2).all(|p| p[0] < p[1]));
        debug_assert!(weights.iter().all(|w| *w > R::zero()));
        Self {
            nodes,
            weights,
            scale,
            requested: count,
        }
    }

    /// Grid matched to the density decay `e^{-2r/n}` of state `n`.
    pub fn for_state(n: u32, count: usize) -> Self {
        assert!(n >= 1);
        Self::new(count, R::of(2.0) / R::of_u32(n))
    }

    /// Grid matched to the product decay `e^{-r(1/n + 1/n')}` of two states.
    pub fn for_pair(n: u32, n_prime: u32, count: usize) -> Self {
        assert!(n >= 1 && n_prime >= 1);
        Self::new(
            count,
            R::one() / R::of_u32(n) + R::one() / R::of_u32(n_prime),
        )
    }

    /// Same decay scale, twice the nodes.
    pub fn refined(&self) -> Self {
        Self::new(self.requested * 2, self.scale)
    }

    pub fn nodes(&self) -> &[R] {
        &self.nodes
    }

    pub fn weights(&self) -> &[R] {
        &self.weights
    }

    pub fn scale(&self) -> R {
        self.scale
    }

    /// Weighted sum over the grid, compensated. Fails on non-finite terms.
    pub fn quadrature(&self, mut f: impl FnMut(R) -> R) -> Result<R> {
        let mut sum = KahanSum::new();
        for (&r, &w) in self.nodes.iter().zip(&self.weights) {
            let value = f(r);
            if !value.is_finite() {
                return Err(Error::NonFinite {
                    at: "radial quadrature",
                });
            }
            sum.add(w * value);
        }
        Ok(sum.value())
    }
}

/// `int_0^inf f(r) dr` with an error estimate from doubling the node count.
/// Returns `(value, estimate)`; the value is from the refined grid.
pub fn integrate_radial<R: Real>(
    f: impl FnMut(R) -> R + Clone,
    grid: &RadialGrid<R>,
) -> Result<(R, R)> {
    let coarse = grid.quadrature(f.clone())?;
    let fine = grid.refined().quadrature(f)?;
    Ok((fine, (fine - coarse).abs()))
}

/// Bound-state energy `E_n = -1/(2 n^2)` Hartree.
///
/// Panics if `n = 0`.
pub fn energy_level<R: Real>(n: u32) -> R {
    assert!(n >= 1, "energy_level: n must be at least 1");
    let nf = R::of_u32(n);
    -R::one() / (R::of(2.0) * nf * nf)
}

/// Mean kinetic energy `<K> = 1/(2 n^2)` Hartree; equals `-E_n` by the
/// virial theorem.
pub fn mean_kinetic<R: Real>(n: u32) -> R {
    -energy_level::<R>(n)
}

/// Normalized radial wavefunction `R_nl(r)`,
/// `R_nl = sqrt((2/n)^3 (n-l-1)!/(2n (n+l)!)) e^{-r/n} (2r/n)^l L_{n-l-1}^{2l+1}(2r/n)`.
///
/// Panics on invalid `(n, l)` or negative `r`.
pub fn radial_wavefunction<R: Real>(n: u32, l: u32, r: R) -> R {
    assert!(n >= 1 && l < n, "radial_wavefunction: invalid (n, l)");
    assert!(r >= R::zero(), "radial_wavefunction: negative radius");
    let nf = R::of_u32(n);
    let rho = R::of(2.0) * r / nf;
    // (n-l-1)!/(n+l)! as an inverse product, overflow-free for bound n.
    let mut inv_ratio = R::one();
    for j in (n - l)..=(n + l) {
        inv_ratio *= R::of_u32(j);
    }
    let norm = ((R::of(2.0) / nf).powi(3) / (R::of(2.0) * nf * inv_ratio)).sqrt();
    norm * rho.powi(l as i32)
        * (-rho / R::of(2.0)).exp()
        * assoc_laguerre(n - l - 1, 2 * l + 1, rho)
}

/// Normalized polar factor `Theta_lm(u)`, `u = cos(theta)`:
/// `sqrt((2l+1)/2 (l-m)!/(l+m)!) P_l^m(u)`, for `0 <= m <= l`.
/// Satisfies `int_-1^1 Theta^2 du = 1`.
pub fn theta_amplitude<R: Real>(l: u32, m: u32, u: R) -> R {
    assert!(m <= l, "theta_amplitude: m must not exceed l");
    let mut inv_ratio = R::one();
    for j in (l - m + 1)..=(l + m) {
        inv_ratio *= R::of_u32(j);
    }
    let norm = ((R::of(2.0) * R::of_u32(l) + R::one()) / (R::of(2.0) * inv_ratio)).sqrt();
    norm * assoc_legendre(l, m, u)
}

/// Real amplitude `F(r, u)` with `psi = (phase) F e^{i m phi}`;
/// `F = R_nl(r) Theta_l|m|(u) / sqrt(2 pi)`.
pub fn wavefunction_amplitude<R: Real>(q: QuantumNumbers, r: R, cos_theta: R) -> R {
    radial_wavefunction(q.n, q.l, r) * theta_amplitude(q.l, q.m.unsigned_abs(), cos_theta)
        / (R::of(2.0) * R::PI()).sqrt()
}

/// Full wavefunction `psi_nlm` at a point. Condon-Shortley convention:
/// `Y_{l,-m} = (-1)^m conj(Y_{l,m})`, so negative `m` picks up `(-1)^|m|`.
pub fn wavefunction<R: Real>(q: QuantumNumbers, point: SphericalPoint<R>) -> Result<Complex<R>> {
    let f = wavefunction_amplitude(q, point.r, point.theta.cos());
    let sign = if q.m < 0 && q.m.unsigned_abs() % 2 == 1 {
        -R::one()
    } else {
        R::one()
    };
    let angle = R::of_i32(q.m) * point.phi;
    Ok(Complex::new(angle.cos(), angle.sin()) * (sign * f))
}

/// Closed-form `<r^-k>` for `k in {1, 2, 3}` (atomic units):
/// `<1/r> = 1/n^2`, `<1/r^2> = 1/(n^3 (l + 1/2))`,
/// `<1/r^3> = 1/(n^3 l (l + 1/2) (l + 1))`.
///
/// `k = 3` diverges for `l = 0` and is reported as a distinct error.
pub fn expectation_inv_r_power<R: Real>(n: u32, l: u32, k: u32) -> Result<R> {
    if n < 1 || l > n - 1 {
        return Err(Error::QuantumNumbers { n, l, m: 0 });
    }
    let nf = R::of_u32(n);
    let lf = R::of_u32(l);
    let half = R::of(0.5);
    match k {
        1 => Ok(R::one() / (nf * nf)),
        2 => Ok(R::one() / (nf.powi(3) * (lf + half))),
        3 => {
            if l == 0 {
                return Err(Error::DivergentExpectation);
            }
            Ok(R::one() / (nf.powi(3) * lf * (lf + half) * (lf + R::one())))
        }
        _ => Err(Error::Domain {
            name: "k",
            value: f64::from(k),
            domain: "{1, 2, 3}",
        }),
    }
}

/// Kinetic-energy action on an eigenstate via the eigenvalue identity
/// `K psi = (E_n + 1/r) psi`; the Coulomb potential is `-1/r` in atomic
/// units. Avoids any numerical Laplacian.
pub fn kinetic_action<R: Real>(q: QuantumNumbers, point: SphericalPoint<R>) -> Result<Complex<R>> {
    let psi = wavefunction(q, point)?;
    Ok(psi * (energy_level::<R>(q.n) + R::one() / point.r))
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::{assert_abs_diff_eq, assert_relative_eq};

    #[test]
    fn quantum_number_validation() {
        assert!(QuantumNumbers::new(2, 1, -1).is_ok());
        assert!(matches!(
            QuantumNumbers::new(0, 0, 0),
            Err(Error::QuantumNumbers { .. })
        ));
        assert!(QuantumNumbers::new(2, 2, 0).is_err());
        assert!(QuantumNumbers::new(3, 1, 2).is_err());
    }

    #[test]
    fn ground_state_at_origin() {
        assert_abs_diff_eq!(radial_wavefunction::<f64>(1, 0, 0.0), 2.0, epsilon = 1e-14);
    }

    #[test]
    fn energy_levels() {
        assert_eq!(energy_level::<f64>(1), -0.5);
        assert_eq!(energy_level::<f64>(10), -0.005);
        assert_eq!(mean_kinetic::<f64>(2), 0.125);
    }

    #[test]
    fn radial_normalization_and_orthogonality() {
        let grid = RadialGrid::<f64>::for_state(3, 80);
        let norm = grid
            .quadrature(|r| {
                let v = radial_wavefunction(3, 1, r);
                v * v * r * r
            })
            .unwrap();
        assert_abs_diff_eq!(norm, 1.0, epsilon = 1e-12);

        let cross_grid = RadialGrid::<f64>::for_pair(3, 1, 80);
        let overlap = cross_grid
            .quadrature(|r| radial_wavefunction(3, 0, r) * radial_wavefunction(1, 0, r) * r * r)
            .unwrap();
        assert_abs_diff_eq!(overlap, 0.0, epsilon = 1e-10);
    }

    #[test]
    fn inverse_r_closed_forms() {
        assert_abs_diff_eq!(
            expectation_inv_r_power::<f64>(2, 1, 2).unwrap(),
            1.0 / 12.0,
            epsilon = 1e-16
        );
        assert_abs_diff_eq!(
            expectation_inv_r_power::<f64>(2, 1, 3).unwrap(),
            1.0 / 24.0,
            epsilon = 1e-16
        );
        assert!(matches!(
            expectation_inv_r_power::<f64>(2, 0, 3),
            Err(Error::DivergentExpectation)
        ));
        assert!(matches!(
            expectation_inv_r_power::<f64>(2, 1, 4),
            Err(Error::Domain { .. })
        ));
    }

    #[test]
    fn virial_identity_is_exact() {
        for n in 1..=12 {
            assert_eq!(mean_kinetic::<f64>(n), -energy_level::<f64>(n));
        }
    }

    #[test]
    fn wavefunction_211_explicit_value() {
        // R_21(2) Y_11(pi/2, 0) = -(e^-1/sqrt 6) sqrt(3/(8 pi)) = -e^-1/(4 sqrt pi).
        let q = QuantumNumbers::new(2, 1, 1).unwrap();
        let p = SphericalPoint::new(2.0, std::f64::consts::FRAC_PI_2, 0.0).unwrap();
        let psi = wavefunction(q, p).unwrap();
        let expected = -(-1.0_f64).exp() / (4.0 * std::f64::consts::PI.sqrt());
        assert_relative_eq!(psi.re, expected, max_relative = 1e-14);
        assert_abs_diff_eq!(psi.im, 0.0, epsilon = 1e-16);
    }

    #[test]
    fn wavefunction_m0_is_real() {
        let q = QuantumNumbers::new(3, 2, 0).unwrap();
        for &phi in &[0.3, 1.7, 4.4] {
            let p = SphericalPoint::new(1.3, 0.9, phi).unwrap();
            let psi = wavefunction(q, p).unwrap();
            assert_eq!(psi.im, 0.0);
        }
    }

    #[test]
    fn negative_m_conjugation_phase() {
        let plus = QuantumNumbers::new(2, 1, 1).unwrap();
        let minus = QuantumNumbers::new(2, 1, -1).unwrap();
        let p = SphericalPoint::new(1.1, 1.0, 0.6).unwrap();
        let a = wavefunction(plus, p).unwrap();
        let b = wavefunction(minus, p).unwrap();
        // Y_{1,-1} = (-1) conj(Y_{1,1}).
        assert_relative_eq!(b.re, -a.re, max_relative = 1e-14);
        assert_relative_eq!(b.im, a.im, max_relative = 1e-14);
    }

    #[test]
    fn integrate_radial_reports_tight_estimate() {
        let grid = RadialGrid::<f64>::new(40, 1.0);
        let (value, estimate) = integrate_radial(|r| (-r).exp() * r * r, &grid).unwrap();
        assert_abs_diff_eq!(value, 2.0, epsilon = 1e-12);
        assert!(estimate < 1e-12);
    }

    #[test]
    fn quadrature_flags_non_finite_integrand() {
        let grid = RadialGrid::<f64>::new(16, 1.0);
        let err = grid
            .quadrature(|r| 1.0 / (r - grid.nodes()[3]))
            .unwrap_err();
        assert!(matches!(err, Error::NonFinite { .. }));
    }

    #[test]
    fn spherical_point_guards() {
        assert!(SphericalPoint::new(0.0, 1.0, 0.0).is_err());
        assert!(SphericalPoint::new(1.0, 0.0, 0.0).is_err());
        assert!(SphericalPoint::new(1.0, std::f64::consts::PI, 0.0).is_err());
        assert!(SphericalPoint::new(1.0, 1.0, f64::NAN).is_err());
    }

    #[test]
    fn kinetic_action_matches_eigenvalue_identity_shape() {
        let q = QuantumNumbers::new(2, 1, 0).unwrap();
        let p = SphericalPoint::new(3.0, 1.2, 0.0).unwrap();
        let k = kinetic_action(q, p).unwrap();
        let psi = wavefunction(q, p).unwrap();
        assert_relative_eq!(k.re, psi.re * (-0.125 + 1.0 / 3.0), max_relative = 1e-14);
    }
}
