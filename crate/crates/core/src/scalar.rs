use std::fmt::{Debug, Display};
use std::iter::Sum;

use num_traits::{Float, FromPrimitive, NumAssign, ToPrimitive};

/// Floating point scalar the library is generic over: `f32` or `f64`.
pub trait Scalar:
    Float + FromPrimitive + ToPrimitive + NumAssign + Sum + Debug + Display + Send + Sync + 'static
{
    /// Default absolute tolerance for this precision.
    fn default_abs_tol() -> Self;
    /// Default relative tolerance for this precision.
    fn default_rel_tol() -> Self;

    /// Converts an `f64` literal; every `f64` is representable (possibly rounded).
    #[inline]
    fn lit(x: f64) -> Self {
        Self::from_f64(x).expect("f64 literal representable in scalar type")
    }

    #[inline]
    fn from_index(i: usize) -> Self {
        Self::from_usize(i).expect("index representable in scalar type")
    }

    #[inline]
    fn as_f64(self) -> f64 {
        self.to_f64().unwrap_or(f64::NAN)
    }
}

impl Scalar for f64 {
    fn default_abs_tol() -> Self {
        1e-9
    }
    fn default_rel_tol() -> Self {
        1e-12
    }
}

impl Scalar for f32 {
    fn default_abs_tol() -> Self {
        1e-5
    }
    fn default_rel_tol() -> Self {
        1e-6
    }
}

/// Largest absolute value in `xs`, or zero for an empty slice.
pub(crate) fn max_abs<T: Scalar>(xs: impl IntoIterator<Item = T>) -> T {
    xs.into_iter().fold(T::zero(), |m, x| m.max(x.abs()))
}
