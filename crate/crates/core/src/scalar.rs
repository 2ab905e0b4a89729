//! Scalar abstraction: every model in this crate is generic over the float type.

use std::fmt::{Debug, Display};
use std::iter::Sum;

use num_traits::{Float, FloatConst, FromPrimitive};

/// Floating-point scalar used by all channel math: `f32` or `f64`.
pub trait Real:
    Float + FloatConst + FromPrimitive + Sum + Debug + Display + Send + Sync + 'static
{
    /// Converts an `f64` literal (dataset constants, tolerances, coefficients).
    fn lit(value: f64) -> Self {
        Self::from_f64(value).expect("literal not representable in this scalar type")
    }

    /// Widens to `f64` for error reporting.
    fn widen(self) -> f64 {
        self.to_f64().unwrap_or(f64::NAN)
    }
}

impl Real for f32 {}
impl Real for f64 {}
