//! Scalar abstraction for distances, signal values and resilience margins.

use std::fmt::{Debug, Display};
use std::iter::Sum;

use num_traits::{Float, FromPrimitive, ToPrimitive};

/// Floating point type usable as a distance / signal scalar: `f32` or `f64`.
///
/// Infinities are meaningful values here (unreachable distances, the bottom
/// resilience pair), so only IEEE float types qualify.
pub trait Scalar:
    Float + FromPrimitive + ToPrimitive + Sum + Debug + Display + Default + Send + Sync + 'static
{
    /// Absolute slack used when testing membership in a closed distance interval.
    fn interval_tolerance() -> Self {
        Self::from_f64(1e-9).unwrap()
    }

    /// Lossy conversion from an `f64` literal.
    fn lit(value: f64) -> Self {
        Self::from_f64(value).unwrap_or_else(Self::nan)
    }

    fn as_f64(self) -> f64 {
        self.to_f64().unwrap_or(f64::NAN)
    }
}

impl Scalar for f32 {}
impl Scalar for f64 {}

/// Signum with `sign(0) = 0` and `sign(±inf) = ±1`.
pub fn sign<T: Scalar>(value: T) -> i8 {
    if value > T::zero() {
        1
    } else if value < T::zero() {
        -1
    } else {
        0
    }
}
