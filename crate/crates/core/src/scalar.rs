//! Integer scalar abstraction.
//!
//! Every routine in the crate is generic over the integer type carrying
//! convergents, digits and linear-form coefficients. [`num_bigint::BigInt`]
//! is exact for any depth; `i128` and `i64` are much faster and report
//! [`Error::Overflow`] instead of wrapping.

use std::fmt::{Debug, Display};
use std::hash::Hash;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{CheckedAdd, CheckedMul, CheckedSub, FromPrimitive, Signed, ToPrimitive};

use crate::error::{Error, Result};

/// Signed integer usable as the coefficient ring of the crate.
pub trait Scalar:
    Integer
    + Signed
    + Clone
    + Hash
    + Debug
    + Display
    + FromPrimitive
    + ToPrimitive
    + CheckedAdd
    + CheckedSub
    + CheckedMul
    + Send
    + Sync
    + 'static
{
}

impl Scalar for i64 {}
impl Scalar for i128 {}
impl Scalar for BigInt {}

#[inline]
pub(crate) fn add<T: Scalar>(a: &T, b: &T) -> Result<T> {
    a.checked_add(b).ok_or(Error::Overflow)
}

#[inline]
pub(crate) fn sub<T: Scalar>(a: &T, b: &T) -> Result<T> {
    a.checked_sub(b).ok_or(Error::Overflow)
}

#[inline]
pub(crate) fn mul<T: Scalar>(a: &T, b: &T) -> Result<T> {
    a.checked_mul(b).ok_or(Error::Overflow)
}

#[inline]
pub(crate) fn neg<T: Scalar>(a: &T) -> Result<T> {
    T::zero().checked_sub(a).ok_or(Error::Overflow)
}

/// Converts a machine integer into the scalar type.
pub fn from_u64<T: Scalar>(x: u64) -> Result<T> {
    T::from_u64(x).ok_or(Error::Overflow)
}

pub fn from_i64<T: Scalar>(x: i64) -> Result<T> {
    T::from_i64(x).ok_or(Error::Overflow)
}

/// Converts a nonnegative scalar to `u64`.
pub fn to_u64<T: Scalar>(x: &T) -> Result<u64> {
    x.to_u64().ok_or(Error::Overflow)
}

pub fn to_i64<T: Scalar>(x: &T) -> Result<i64> {
    x.to_i64().ok_or(Error::Overflow)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn checked_ops_report_overflow() {
        assert_eq!(mul(&i64::MAX, &2), Err(Error::Overflow));
        assert_eq!(add(&i128::MAX, &1), Err(Error::Overflow));
        assert_eq!(neg(&i64::MIN), Err(Error::Overflow));
        let big = BigInt::from(i128::MAX);
        assert!(mul(&big, &big).is_ok());
    }

    #[test]
    fn conversions() {
        assert_eq!(from_u64::<i64>(u64::MAX), Err(Error::Overflow));
        assert_eq!(to_u64(&-1i64), Err(Error::Overflow));
        assert_eq!(to_u64(&BigInt::from(42)), Ok(42));
    }
}
