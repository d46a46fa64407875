use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::Signed;
use serde_json::{json, Value};

use super::rational::rational_from_json;
use super::{Rational, Scalar};
use crate::error::{Error, Result};

/// `a + b√D` with `D` a positive rational that is not a perfect square.
///
/// The discriminant is only carried while `b ≠ 0`, so rational values
/// combine with any extension.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct QuadScalar {
    a: Rational,
    b: Rational,
    d: Option<Rational>,
}

fn rational_sqrt(q: &Rational) -> Option<Rational> {
    if q.is_negative() {
        return None;
    }
    let root = |n: &BigInt| {
        let r = n.sqrt();
        (&r * &r == *n).then_some(r)
    };
    Some(Rational::new(root(q.numer())?, root(q.denom())?))
}

impl QuadScalar {
    pub fn new(a: Rational, b: Rational, d: Rational) -> Self {
        let mut out = QuadScalar { a, b, d: Some(d) };
        out.canonicalize();
        out
    }

    pub fn rational(a: Rational) -> Self {
        QuadScalar {
            a,
            b: Rational::zero(),
            d: None,
        }
    }

    /// `√d`, folded into `Q` when `d` is a perfect square.
    pub fn sqrt(d: Rational) -> Self {
        Self::new(Rational::zero(), Scalar::one(), d)
    }

    pub fn a(&self) -> &Rational {
        &self.a
    }

    pub fn b(&self) -> &Rational {
        &self.b
    }

    pub fn discriminant(&self) -> Option<&Rational> {
        self.d.as_ref()
    }

    pub fn as_rational(&self) -> Option<&Rational> {
        self.b.is_zero().then_some(&self.a)
    }

    pub fn conjugate(&self) -> Self {
        QuadScalar {
            a: self.a.clone(),
            b: -self.b.clone(),
            d: self.d.clone(),
        }
    }

    /// `a² − b²D`.
    pub fn norm(&self) -> Rational {
        match &self.d {
            Some(d) => &self.a * &self.a - &self.b * &self.b * d,
            None => &self.a * &self.a,
        }
    }

    fn canonicalize(&mut self) {
        if self.b.is_zero() {
            self.d = None;
            return;
        }
        let Some(d) = &self.d else { return };
        if d.is_zero() {
            self.b = Rational::zero();
            self.d = None;
        } else if let Some(r) = rational_sqrt(d) {
            self.a = &self.a + &self.b * r;
            self.b = Rational::zero();
            self.d = None;
        }
    }

    fn merge(&self, other: &Self) -> Result<Option<Rational>> {
        match (&self.d, &other.d) {
            (Some(x), Some(y)) if x != y => Err(Error::DiscriminantMismatch(
                Box::new(x.clone()),
                Box::new(y.clone()),
            )),
            (Some(x), _) | (None, Some(x)) => Ok(Some(x.clone())),
            (None, None) => Ok(None),
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        let d = self.merge(other)?;
        let mut out = QuadScalar {
            a: &self.a + &other.a,
            b: &self.b + &other.b,
            d,
        };
        out.canonicalize();
        Ok(out)
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        let d = self.merge(other)?;
        let bb = &self.b * &other.b;
        let a = match &d {
            Some(d) if !bb.is_zero() => &self.a * &other.a + bb * d,
            _ => &self.a * &other.a,
        };
        let mut out = QuadScalar {
            a,
            b: &self.a * &other.b + &self.b * &other.a,
            d,
        };
        out.canonicalize();
        Ok(out)
    }

    pub fn checked_inv(&self) -> Result<Self> {
        let n = self.norm();
        if n.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let mut out = QuadScalar {
            a: &self.a / &n,
            b: -(&self.b / &n),
            d: self.d.clone(),
        };
        out.canonicalize();
        Ok(out)
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let field = |k: &str| {
            v.get(k)
                .ok_or_else(|| Error::Parse(format!("missing field {k}")))
                .and_then(rational_from_json)
        };
        Ok(Self::new(field("a")?, field("b")?, field("D")?))
    }
}

impl Add for QuadScalar {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        self.checked_add(&rhs)
            .expect("quadratic scalars from different fields")
    }
}

impl Sub for QuadScalar {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self.checked_add(&-rhs)
            .expect("quadratic scalars from different fields")
    }
}

impl Mul for QuadScalar {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        self.checked_mul(&rhs)
            .expect("quadratic scalars from different fields")
    }
}

impl Neg for QuadScalar {
    type Output = Self;
    fn neg(self) -> Self {
        QuadScalar {
            a: -self.a,
            b: -self.b,
            d: self.d,
        }
    }
}

impl Scalar for QuadScalar {
    fn zero() -> Self {
        Self::rational(Rational::zero())
    }

    fn one() -> Self {
        Self::rational(Scalar::one())
    }

    fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    fn from_rational(q: &Rational) -> Self {
        Self::rational(q.clone())
    }

    fn inv(&self) -> Result<Self> {
        self.checked_inv()
    }

    fn to_json(&self) -> Value {
        let d = self.d.clone().unwrap_or_else(Rational::zero);
        json!({"a": self.a.to_string(), "b": self.b.to_string(), "D": d.to_string()})
    }

    fn rational_value(&self) -> Option<Rational> {
        self.as_rational().cloned()
    }
}

impl fmt::Display for QuadScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.d {
            None => write!(f, "{}", self.a),
            Some(d) if self.a.is_zero() => write!(f, "{}√{}", self.b, d),
            Some(d) => write!(f, "{} + {}√{}", self.a, self.b, d),
        }
    }
}

impl fmt::Debug for QuadScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Quad({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::super::rat;
    use super::*;

    fn q(a: i64, b: i64, d: i64) -> QuadScalar {
        QuadScalar::new(rat(a, 1), rat(b, 1), rat(d, 1))
    }

    #[test]
    fn alpha_product_at_two_three() {
        let ap = QuadScalar::sqrt(rat(3, 1));
        let am = QuadScalar::new(rat(0, 1), rat(-2, 3), rat(3, 1));
        assert_eq!(ap * am, QuadScalar::from_int(-2));
    }

    #[test]
    fn rationalized_inverse() {
        let s3 = QuadScalar::sqrt(rat(3, 1));
        let inv = s3.inv().unwrap();
        assert_eq!(inv, QuadScalar::new(rat(0, 1), rat(1, 3), rat(3, 1)));
        assert_eq!(s3 * inv, QuadScalar::one());
    }

    #[test]
    fn identity_multiplication() {
        let x = q(2, 5, 7);
        assert_eq!(QuadScalar::one() * x.clone(), x);
    }

    #[test]
    fn perfect_square_folds() {
        assert_eq!(QuadScalar::sqrt(rat(9, 1)), QuadScalar::from_int(3));
        assert_eq!(
            QuadScalar::sqrt(rat(4, 9)),
            QuadScalar::from_rational(&rat(2, 3))
        );
        assert!(q(1, 2, 9).discriminant().is_none());
    }

    #[test]
    fn mismatch_and_zero_division() {
        let err = q(0, 1, 3).checked_add(&q(0, 1, 5)).unwrap_err();
        assert!(matches!(err, Error::DiscriminantMismatch(_, _)));
        assert_eq!(QuadScalar::zero().inv(), Err(Error::DivisionByZero));
        assert!(q(1, 0, 3).checked_mul(&q(0, 1, 5)).is_ok());
    }

    #[test]
    fn json_roundtrip() {
        let x = QuadScalar::new(rat(1, 2), rat(-3, 4), rat(8, 3));
        assert_eq!(QuadScalar::from_json(&x.to_json()).unwrap(), x);
    }
}
