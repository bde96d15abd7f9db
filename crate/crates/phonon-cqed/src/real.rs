//! Scalar abstraction for the numerical core.
//!
//! Everything downstream is generic over a real floating-point type `T: Real`,
//! with complex arithmetic done through `num_complex::Complex<T>`. Operations
//! that go through LAPACK (eigendecompositions, linear solves) additionally
//! require `Complex<T>: Lapack`, which holds for `f32` and `f64`.

use std::fmt::{Debug, Display};
use std::iter::{Product, Sum};

use ndarray::ScalarOperand;
use num_complex::Complex;
use num_traits::{Float, FloatConst, FromPrimitive, NumAssignOps, Signed};

/// Real scalar type of the library: `f32` or `f64`.
pub trait Real:
    Float
    + FloatConst
    + FromPrimitive
    + NumAssignOps
    + Signed
    + ScalarOperand
    + Sum
    + Product
    + Debug
    + Display
    + Send
    + Sync
    + 'static
{
}

impl Real for f32 {}
impl Real for f64 {}

/// Convert an `f64` literal into the working precision.
#[inline]
pub fn r<T: Real>(x: f64) -> T {
    T::from_f64(x).expect("literal not representable in scalar type")
}

/// Convert an `f64` literal into a complex number of the working precision.
#[inline]
pub fn c<T: Real>(re: f64, im: f64) -> Complex<T> {
    Complex::new(r(re), r(im))
}

/// i at the working precision.
#[inline]
pub fn im<T: Real>() -> Complex<T> {
    Complex::new(T::zero(), T::one())
}

/// ħ/k_B in ps·K. With frequencies ν in rad/ps and temperature T in Kelvin,
/// the dimensionless thermal argument βħν equals `HBAR_OVER_KB * nu / T`.
pub const HBAR_OVER_KB: f64 = 1.054_571_817e-34 / 1.380_649e-23 * 1e12;

/// βħν for frequency `nu` (rad/ps) and temperature (K); `None` at T = 0.
#[inline]
pub fn beta_hbar_nu<T: Real>(nu: T, temperature: T) -> Option<T> {
    if temperature == T::zero() {
        None
    } else {
        Some(r::<T>(HBAR_OVER_KB) * nu / temperature)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hbar_over_kb_value() {
        // ħ = 1.054571817e-34 J s, k_B = 1.380649e-23 J/K (exact SI).
        assert!((HBAR_OVER_KB - 7.638_232_6).abs() < 1e-6);
    }

    #[test]
    fn literal_conversion_roundtrip() {
        let x: f64 = r::<f64>(0.25);
        assert_eq!(x, 0.25);
        let z = c::<f32>(1.5, -2.0);
        assert_eq!(z, Complex::new(1.5f32, -2.0));
    }
}
