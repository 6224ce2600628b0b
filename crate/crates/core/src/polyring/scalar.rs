//! Coefficient rings.
//!
//! The sparse polynomial core is generic over its coefficient type. Any type
//! with `num-traits` zero/one and by-reference ring operations qualifies, so
//! the same code serves exact rationals, rational functions in symbolic
//! parameters and, for throwaway numeric experiments, `f64`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// A commutative ring usable as polynomial coefficients.
pub trait Scalar:
    Clone + PartialEq + fmt::Debug + Zero + One + Neg<Output = Self> + Send + Sync + 'static
{
    fn add_ref(&self, rhs: &Self) -> Self;
    fn sub_ref(&self, rhs: &Self) -> Self;
    fn mul_ref(&self, rhs: &Self) -> Self;

    fn from_i64(n: i64) -> Self {
        let mut acc = Self::zero();
        let one = Self::one();
        for _ in 0..n.unsigned_abs() {
            acc = acc.add_ref(&one);
        }
        if n < 0 {
            -acc
        } else {
            acc
        }
    }
}

impl<T> Scalar for T
where
    T: Clone + PartialEq + fmt::Debug + Zero + One + Neg<Output = T> + Send + Sync + 'static,
    for<'a> &'a T: Add<&'a T, Output = T> + Sub<&'a T, Output = T> + Mul<&'a T, Output = T>,
{
    fn add_ref(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub_ref(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul_ref(&self, rhs: &Self) -> Self {
        self * rhs
    }
}

/// A field: every nonzero element is invertible.
pub trait FieldScalar: Scalar {
    fn try_inv(&self) -> Option<Self>;
}

impl FieldScalar for BigRational {
    fn try_inv(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(self.recip())
        }
    }
}

impl FieldScalar for f64 {
    fn try_inv(&self) -> Option<Self> {
        if *self == 0.0 {
            None
        } else {
            Some(1.0 / self)
        }
    }
}

pub fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

pub fn factorial(n: u32) -> BigRational {
    let mut acc = BigInt::one();
    for k in 2..=n {
        acc *= k;
    }
    BigRational::from_integer(acc)
}

pub fn binomial(n: u32, k: u32) -> BigRational {
    if k > n {
        return BigRational::zero();
    }
    factorial(n) / (factorial(k) * factorial(n - k))
}

/// Formats a rational the way the expression grammar reads it back.
pub fn fmt_rational(q: &BigRational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

pub(crate) fn is_negative(q: &BigRational) -> bool {
    q.is_negative()
}
