use std::fmt::Debug;

use num_traits::{Float, FloatConst, FromPrimitive};

/// Real scalar accepted by the numerical kernels.
pub trait Real: Float + FloatConst + FromPrimitive + Debug + Send + Sync + 'static {
    /// Lift an `f64` literal. Lossy for narrower types, which is the point.
    #[inline]
    fn lit(x: f64) -> Self {
        Self::from_f64(x).expect("finite literal")
    }
}

impl Real for f32 {}
impl Real for f64 {}
