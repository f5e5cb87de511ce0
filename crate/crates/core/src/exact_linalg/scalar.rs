use std::fmt::{Debug, Display};
use std::hash::Hash;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision rational, always in lowest terms with a positive denominator.
pub type ExactScalar = BigRational;

/// Exact field arithmetic shared by [`ExactScalar`] and [`super::GaussianScalar`].
pub trait Field:
    Sized
    + Clone
    + Debug
    + Display
    + PartialEq
    + Eq
    + Hash
    + Zero
    + One
    + Neg<Output = Self>
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + for<'a> Add<&'a Self, Output = Self>
    + for<'a> Sub<&'a Self, Output = Self>
    + for<'a> Mul<&'a Self, Output = Self>
{
    /// Multiplicative inverse, `None` for zero.
    fn inverse(&self) -> Option<Self>;

    /// Complex conjugate; the identity on real fields.
    fn conjugate(&self) -> Self;

    fn from_rational(q: ExactScalar) -> Self;
}

impl Field for ExactScalar {
    fn inverse(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(self.recip())
        }
    }

    fn conjugate(&self) -> Self {
        self.clone()
    }

    fn from_rational(q: ExactScalar) -> Self {
        q
    }
}

/// `a / b`, failing instead of panicking when `b` is zero.
pub fn checked_div<T: Field>(a: &T, b: &T) -> Result<T> {
    let inv = b.inverse().ok_or(Error::DivisionByZero)?;
    Ok(a.clone() * inv)
}

pub fn q(n: i64) -> ExactScalar {
    BigRational::from_integer(BigInt::from(n))
}

pub fn frac(num: i64, den: i64) -> ExactScalar {
    assert!(den != 0, "zero denominator");
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// Parses `"p"` or `"p/q"` into a rational in lowest terms.
pub fn parse_rational(s: &str) -> Option<ExactScalar> {
    let s = s.trim();
    match s.split_once('/') {
        None => s.parse::<BigInt>().ok().map(BigRational::from_integer),
        Some((p, d)) => {
            let p = p.trim().parse::<BigInt>().ok()?;
            let d = d.trim().parse::<BigInt>().ok()?;
            if d.is_zero() {
                None
            } else {
                Some(BigRational::new(p, d))
            }
        }
    }
}

/// Renders as `"p/q"`, or `"p"` when the denominator is one.
pub fn render_rational(x: &ExactScalar) -> String {
    if x.denom().is_one() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

pub fn is_positive(x: &ExactScalar) -> bool {
    x.is_positive()
}
