//! Error taxonomy shared by the whole crate.
//!
//! Domain violations, the one genuinely divergent expectation value, coordinate
//! singularities, and quadrature failures are distinct variants so callers (and
//! the CLI exit-code mapping) can tell recoverable input mistakes from numerical
//! breakdown.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid quantum numbers n={n}, l={l}, m={m}: require n >= 1, l <= n-1, |m| <= l")]
    QuantumNumbers { n: u32, l: u32, m: i32 },

    #[error("{name} = {value:e} outside domain {domain}")]
    Domain {
        name: &'static str,
        value: f64,
        domain: &'static str,
    },

    #[error("<r^-3> diverges for s states; the 1/r^3 deformation term requires l >= 1")]
    DivergentExpectation,

    #[error("point too close to the polar axis (sin theta = {sin_theta:e})")]
    CoordinateSingularity { sin_theta: f64 },

    #[error("radius r = {r:e} too close to the origin")]
    RadiusSingularity { r: f64 },

    #[error("non-finite value produced in {at}")]
    NonFinite { at: &'static str },

    #[error(
        "quadrature did not converge: error estimate {estimate:e} after {levels} refinement levels"
    )]
    Convergence { estimate: f64, levels: u32 },

    #[error("deformation parameters undefined: beta + beta' = 0")]
    UndefinedParameter,
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    /// `true` for failures of the numerics rather than of the inputs.
    pub fn is_numerical(&self) -> bool {
        matches!(self, Error::NonFinite { .. } | Error::Convergence { .. })
    }
}
