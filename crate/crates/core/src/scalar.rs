//! Real scalar abstraction shared by every numeric type in the crate.

use std::fmt::{Debug, Display};

use num_traits::{Float, FloatConst, FromPrimitive, ToPrimitive};

/// Floating point field used for the real coordinates: `f32` or `f64`.
///
/// The associated constants are the default tolerances for that precision.
pub trait Scalar:
    Float + FloatConst + FromPrimitive + ToPrimitive + Debug + Display + Default + Send + Sync + 'static
{
    /// Cutoff below which an idempotent component counts as zero.
    const DEFAULT_TOL_ZERO: f64;
    /// Eigenvalue matching / rank tolerance, relative to the matrix norm.
    const DEFAULT_TOL_EIG: f64;
    /// Slack used when comparing hyperbolic norms.
    const DEFAULT_TOL_NORM: f64;

    /// Lossy conversion from `f64`; every literal in the crate goes through here.
    #[inline]
    fn of(x: f64) -> Self {
        Self::from_f64(x).expect("f64 literal representable in scalar type")
    }

    #[inline]
    fn two() -> Self {
        Self::one() + Self::one()
    }

    #[inline]
    fn half() -> Self {
        Self::one() / Self::two()
    }
}

impl Scalar for f64 {
    const DEFAULT_TOL_ZERO: f64 = 1e-10;
    const DEFAULT_TOL_EIG: f64 = 1e-8;
    const DEFAULT_TOL_NORM: f64 = 1e-9;
}

impl Scalar for f32 {
    const DEFAULT_TOL_ZERO: f64 = 1e-5;
    const DEFAULT_TOL_EIG: f64 = 1e-3;
    const DEFAULT_TOL_NORM: f64 = 1e-4;
}
