use std::fmt::{Debug, Display};
use std::ops::Neg;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{FromPrimitive, Num, Unsigned, Zero};

/// Unsigned integer type the counting recurrences and closed forms run over.
///
/// [`BigUint`] never overflows. Fixed-width types are accepted for speed at
/// small lengths; they panic on overflow in debug builds like any other
/// integer arithmetic.
pub trait Count:
    Integer + Unsigned + Clone + Debug + Display + From<u64> + Send + Sync + 'static
{
    fn to_biguint(&self) -> BigUint;
}

impl Count for BigUint {
    fn to_biguint(&self) -> BigUint {
        self.clone()
    }
}

impl Count for u64 {
    fn to_biguint(&self) -> BigUint {
        BigUint::from(*self)
    }
}

impl Count for u128 {
    fn to_biguint(&self) -> BigUint {
        BigUint::from(*self)
    }
}

/// Coefficient field for truncated power series.
pub trait Field: Num + Neg<Output = Self> + Clone + Debug + Display + PartialEq + Send + Sync {
    fn from_i64(value: i64) -> Self;

    /// The coefficient as an integer, or `None` when it is not one.
    fn to_integer(&self) -> Option<BigInt>;
}

impl Field for BigRational {
    fn from_i64(value: i64) -> Self {
        BigRational::from_integer(BigInt::from(value))
    }

    fn to_integer(&self) -> Option<BigInt> {
        self.is_integer().then(|| self.to_integer())
    }
}

macro_rules! impl_float_field {
    ($f:ty) => {
        impl Field for $f {
            fn from_i64(value: i64) -> Self {
                value as $f
            }

            // Floats only approximate; accept values within a relative 1e-6 of
            // an integer.
            fn to_integer(&self) -> Option<BigInt> {
                let r = self.round();
                let tol = 1e-6 * r.abs().max(1.0);
                if (*self - r).abs() <= tol {
                    BigInt::from_f64(r as f64)
                } else {
                    None
                }
            }
        }
    };
}

impl_float_field!(f32);
impl_float_field!(f64);

/// Converts an exact integer coefficient back to a count, rejecting negatives.
pub(crate) fn nonnegative<T: Count>(value: &BigInt) -> Option<T> {
    if value.is_zero() {
        return Some(T::zero());
    }
    let mag = value.to_biguint()?;
    // Route through decimal so any Count implementation can be reached.
    T::from_str_radix(&mag.to_str_radix(10), 10).ok()
}
