//! Scalar abstraction for the numeric core.
//!
//! Everything downstream is generic over [`Real`] so the same formulas can be
//! instantiated at `f32` or `f64`. The tolerances quoted throughout the crate
//! assume `f64`; `f32` compiles and runs but will not meet them.

use std::fmt::{Debug, Display};
use std::iter::Sum;
use std::ops::{AddAssign, DivAssign, MulAssign, SubAssign};

use num_traits::{Float, FloatConst, FromPrimitive, ToPrimitive};

/// Floating-point scalar the core computations are generic over.
pub trait Real:
    Float
    + FloatConst
    + FromPrimitive
    + ToPrimitive
    + AddAssign
    + SubAssign
    + MulAssign
    + DivAssign
    + Sum<Self>
    + Default
    + Debug
    + Display
    + 'static
{
    /// Conversion from an `f64` literal, lossy for narrower scalars.
    fn of(value: f64) -> Self {
        Self::from_f64(value).expect("f64 literal must be representable")
    }

    fn of_u32(value: u32) -> Self {
        Self::from_u32(value).expect("u32 value must be representable")
    }

    fn of_usize(value: usize) -> Self {
        Self::from_usize(value).expect("usize value must be representable")
    }

    fn of_i32(value: i32) -> Self {
        Self::from_i32(value).expect("i32 value must be representable")
    }
}

impl<T> Real for T where
    T: Float
        + FloatConst
        + FromPrimitive
        + ToPrimitive
        + AddAssign
        + SubAssign
        + MulAssign
        + DivAssign
        + Sum<T>
        + Default
        + Debug
        + Display
        + 'static
{
}

/// Compensated (Kahan) accumulator. The flux and moment sums mix magnitudes
/// spanning twelve orders; naive summation costs two digits there.
#[derive(Debug, Clone, Copy)]
pub struct KahanSum<R: Real> {
    total: R,
    compensation: R,
}

impl<R: Real> KahanSum<R> {
    pub fn new() -> Self {
        Self {
            total: R::zero(),
            compensation: R::zero(),
        }
    }

    pub fn add(&mut self, term: R) {
        let y = term - self.compensation;
        let t = self.total + y;
        self.compensation = (t - self.total) - y;
        self.total = t;
    }

    pub fn value(&self) -> R {
        self.total
    }
}

impl<R: Real> Default for KahanSum<R> {
    fn default() -> Self {
        Self::new()
    }
}
