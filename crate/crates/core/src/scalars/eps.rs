use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde_json::{json, Value};

use super::{Rational, Scalar};
use crate::error::{Error, Result};

pub const DEFAULT_ORDER: usize = 8;

/// Element of `C[[ε]]/(ε^K)`, stored as exactly `K` coefficients.
#[derive(Clone, PartialEq)]
pub struct EpsSeries<C, const K: usize = DEFAULT_ORDER> {
    coeffs: Vec<C>,
}

impl<C: Scalar, const K: usize> EpsSeries<C, K> {
    pub fn new(mut coeffs: Vec<C>) -> Self {
        assert!(K > 0, "truncation order must be positive");
        coeffs.resize(K, C::zero());
        EpsSeries { coeffs }
    }

    pub fn constant(c: C) -> Self {
        Self::new(vec![c])
    }

    /// `c0 + c1·ε`.
    pub fn linear(c0: C, c1: C) -> Self {
        Self::new(vec![c0, c1])
    }

    pub fn order(&self) -> usize {
        K
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> &C {
        &self.coeffs[i]
    }

    pub fn constant_term(&self) -> &C {
        &self.coeffs[0]
    }

    pub fn is_unit(&self) -> bool {
        !self.coeffs[0].is_zero()
    }

    pub fn map<D: Scalar>(&self, f: impl Fn(&C) -> D) -> EpsSeries<D, K> {
        EpsSeries::new(self.coeffs.iter().map(f).collect())
    }
}

impl<C: Scalar, const K: usize> Add for EpsSeries<C, K> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        EpsSeries {
            coeffs: self
                .coeffs
                .into_iter()
                .zip(rhs.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

impl<C: Scalar, const K: usize> Sub for EpsSeries<C, K> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        EpsSeries {
            coeffs: self
                .coeffs
                .into_iter()
                .zip(rhs.coeffs)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }
}

impl<C: Scalar, const K: usize> Mul for EpsSeries<C, K> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        let mut out = vec![C::zero(); K];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs[..K - i].iter().enumerate() {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        EpsSeries { coeffs: out }
    }
}

impl<C: Scalar, const K: usize> Neg for EpsSeries<C, K> {
    type Output = Self;
    fn neg(self) -> Self {
        EpsSeries {
            coeffs: self.coeffs.into_iter().map(|a| -a).collect(),
        }
    }
}

impl<C: Scalar, const K: usize> Scalar for EpsSeries<C, K> {
    fn zero() -> Self {
        Self::new(Vec::new())
    }

    fn one() -> Self {
        Self::constant(C::one())
    }

    fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Scalar::is_zero)
    }

    fn from_rational(q: &Rational) -> Self {
        Self::constant(C::from_rational(q))
    }

    fn inv(&self) -> Result<Self> {
        if !self.is_unit() {
            return Err(Error::NotAUnit);
        }
        let b0 = self.coeffs[0].inv()?;
        let mut out = vec![b0.clone()];
        for n in 1..K {
            let s = (1..=n).fold(C::zero(), |acc, i| {
                acc + self.coeffs[i].clone() * out[n - i].clone()
            });
            out.push(-(b0.clone() * s));
        }
        Ok(EpsSeries { coeffs: out })
    }

    fn to_json(&self) -> Value {
        json!({"eps": self.coeffs.iter().map(Scalar::to_json).collect::<Vec<_>>(), "K": K})
    }
}

impl<C: Scalar, const K: usize> fmt::Display for EpsSeries<C, K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| match i {
                0 => format!("({c})"),
                1 => format!("({c})ε"),
                _ => format!("({c})ε^{i}"),
            })
            .collect();
        if terms.is_empty() {
            write!(f, "0 + O(ε^{K})")
        } else {
            write!(f, "{} + O(ε^{K})", terms.join(" + "))
        }
    }
}

impl<C: Scalar, const K: usize> fmt::Debug for EpsSeries<C, K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Eps({self})")
    }
}
