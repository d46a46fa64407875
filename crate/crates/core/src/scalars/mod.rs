//! Exact coefficient rings: rationals, the quadratic field holding the
//! free-field parameters, rational functions of a formal `κ`, and the
//! truncated deformation ring `O = Q[[ε]]/(ε^K)`.

mod eps;
mod kappa;
mod poly;
mod quad;
mod rational;

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde_json::Value;

use crate::error::Result;

pub use eps::{EpsSeries, DEFAULT_ORDER};
pub use kappa::KappaFunction;
pub use poly::Poly;
pub use quad::QuadScalar;
pub use rational::{parse_rational, rat, rational_from_json, Rational};

/// A commutative ring with exact arithmetic and partial inversion.
pub trait Scalar:
    Clone
    + PartialEq
    + fmt::Debug
    + fmt::Display
    + Send
    + Sync
    + 'static
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn from_rational(q: &Rational) -> Self;
    fn inv(&self) -> Result<Self>;
    fn to_json(&self) -> Value;

    /// The value as a rational number, when it is one.
    fn rational_value(&self) -> Option<Rational> {
        None
    }

    fn from_int(n: i64) -> Self {
        Self::from_rational(&rat(n, 1))
    }

    fn is_one(&self) -> bool {
        *self == Self::one()
    }

    fn div(&self, other: &Self) -> Result<Self> {
        Ok(self.clone() * other.inv()?)
    }

    fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one();
        let mut base = self.clone();
        let mut e = n;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base.clone();
            }
            e >>= 1;
            if e > 0 {
                base = base.clone() * base;
            }
        }
        acc
    }

    fn scale(&self, q: &Rational) -> Self {
        self.clone() * Self::from_rational(q)
    }
}
