use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde_json::{json, Value};

use super::rational::rational_from_json;
use super::{Poly, Rational, Scalar};
use crate::error::{Error, Result};

/// Reduced rational function `num(κ)/den(κ)` with monic denominator.
#[derive(Clone, PartialEq)]
pub struct KappaFunction {
    num: Poly<Rational>,
    den: Poly<Rational>,
}

fn exact_div(a: &Poly<Rational>, b: &Poly<Rational>) -> Poly<Rational> {
    let (q, r) = a.div_rem(b).expect("nonzero divisor");
    debug_assert!(r.is_zero());
    q
}

impl KappaFunction {
    pub fn new(num: Poly<Rational>, den: Poly<Rational>) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let g = Poly::gcd(&num, &den)?;
        Ok(Self::normalized(exact_div(&num, &g), exact_div(&den, &g)))
    }

    fn normalized(num: Poly<Rational>, den: Poly<Rational>) -> Self {
        if num.is_zero() {
            return Self::polynomial(Poly::zero());
        }
        let lead = den.leading().expect("nonzero denominator").clone();
        if lead.is_one() {
            return KappaFunction { num, den };
        }
        let inv = lead.inv().expect("nonzero leading coefficient");
        KappaFunction {
            num: num.scale(&inv),
            den: den.scale(&inv),
        }
    }

    pub fn polynomial(num: Poly<Rational>) -> Self {
        KappaFunction {
            num,
            den: Poly::one(),
        }
    }

    /// The indeterminate `κ`.
    pub fn kappa() -> Self {
        Self::polynomial(Poly::x())
    }

    pub fn numerator(&self) -> &Poly<Rational> {
        &self.num
    }

    pub fn denominator(&self) -> &Poly<Rational> {
        &self.den
    }

    pub fn specialize(&self, k0: &Rational) -> Result<Rational> {
        let d = self.den.eval(k0);
        if d.is_zero() {
            return Err(Error::PoleAtKappa(k0.clone()));
        }
        Ok(self.num.eval(k0) / d)
    }

    /// `f(1/κ)`.
    pub fn invert_variable(&self) -> Self {
        let rev = |p: &Poly<Rational>, n: usize| {
            let mut c = p.coeffs().to_vec();
            c.resize(n + 1, Rational::zero());
            c.reverse();
            Poly::new(c)
        };
        let n = self
            .num
            .degree()
            .unwrap_or(0)
            .max(self.den.degree().unwrap_or(0));
        Self::new(rev(&self.num, n), rev(&self.den, n)).expect("nonzero denominator")
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let list = |k: &str| -> Result<Poly<Rational>> {
            let arr = v
                .get(k)
                .and_then(Value::as_array)
                .ok_or_else(|| Error::Parse(format!("missing list {k}")))?;
            Ok(Poly::new(
                arr.iter().map(rational_from_json).collect::<Result<_>>()?,
            ))
        };
        Self::new(list("num")?, list("den")?)
    }
}

impl Add for KappaFunction {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        if self.den == rhs.den {
            return Self::new(&self.num + &rhs.num, self.den).expect("nonzero denominator");
        }
        if self.den.degree() == Some(0) && rhs.den.degree() == Some(0) {
            return Self::polynomial(&self.num + &rhs.num);
        }
        let g = Poly::gcd(&self.den, &rhs.den).expect("nonzero denominators");
        let b1 = exact_div(&self.den, &g);
        let d1 = exact_div(&rhs.den, &g);
        let num = &(&self.num * &d1) + &(&rhs.num * &b1);
        let g2 = Poly::gcd(&num, &g).expect("nonzero gcd");
        let den = &(&b1 * &d1) * &exact_div(&g, &g2);
        Self::normalized(exact_div(&num, &g2), den)
    }
}

impl Sub for KappaFunction {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl Mul for KappaFunction {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        if self.num.is_zero() || rhs.num.is_zero() {
            return Self::zero();
        }
        let g1 = Poly::gcd(&self.num, &rhs.den).expect("nonzero");
        let g2 = Poly::gcd(&rhs.num, &self.den).expect("nonzero");
        let num = &exact_div(&self.num, &g1) * &exact_div(&rhs.num, &g2);
        let den = &exact_div(&self.den, &g2) * &exact_div(&rhs.den, &g1);
        Self::normalized(num, den)
    }
}

impl Neg for KappaFunction {
    type Output = Self;
    fn neg(self) -> Self {
        KappaFunction {
            num: -self.num,
            den: self.den,
        }
    }
}

impl Scalar for KappaFunction {
    fn zero() -> Self {
        Self::polynomial(Poly::zero())
    }

    fn one() -> Self {
        Self::polynomial(Poly::one())
    }

    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    fn from_rational(q: &Rational) -> Self {
        Self::polynomial(Poly::constant(q.clone()))
    }

    fn inv(&self) -> Result<Self> {
        if self.num.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::normalized(self.den.clone(), self.num.clone()))
    }

    fn to_json(&self) -> Value {
        let list =
            |p: &Poly<Rational>| p.coeffs().iter().map(|c| c.to_string()).collect::<Vec<_>>();
        json!({"num": list(&self.num), "den": list(&self.den)})
    }
}

impl fmt::Display for KappaFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.degree() == Some(0) {
            write!(f, "{}", self.num.fmt_var("κ"))
        } else {
            write!(f, "[{}]/[{}]", self.num.fmt_var("κ"), self.den.fmt_var("κ"))
        }
    }
}

impl fmt::Debug for KappaFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Kappa({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::super::rat;
    use super::*;

    fn k() -> KappaFunction {
        KappaFunction::kappa()
    }

    fn c(n: i64) -> KappaFunction {
        KappaFunction::from_int(n)
    }

    #[test]
    fn cancels_common_factor() {
        let f = (k() * k() - c(1)).div(&(k() + c(1))).unwrap();
        assert_eq!(f, k() - c(1));
        assert_eq!(f.denominator(), &Poly::one());
    }

    #[test]
    fn specialization() {
        let f = (c(2) * k()).div(&(k() + c(1))).unwrap();
        assert_eq!(f.specialize(&rat(2, 3)).unwrap(), rat(4, 5));
        let g = (k() - c(1)).inv().unwrap();
        assert_eq!(g.specialize(&rat(1, 1)), Err(Error::PoleAtKappa(rat(1, 1))));
    }

    #[test]
    fn monic_denominator() {
        let f = c(1).div(&(c(3) * k() + c(6))).unwrap();
        assert_eq!(f.denominator().leading(), Some(&rat(1, 1)));
        assert_eq!(f.specialize(&rat(0, 1)).unwrap(), rat(1, 6));
    }

    #[test]
    fn variable_inversion() {
        let f = (k() + c(1)).div(&(c(2) * k() * k())).unwrap();
        let g = f.invert_variable();
        assert_eq!(
            g.specialize(&rat(3, 1)).unwrap(),
            f.specialize(&rat(1, 3)).unwrap()
        );
    }

    #[test]
    fn json_roundtrip() {
        let f = (k() + c(1)).div(&(c(2) * k() * k())).unwrap();
        assert_eq!(KappaFunction::from_json(&f.to_json()).unwrap(), f);
    }
}
