//! The ring of symmetric functions in the power-sum and monomial bases.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigInt;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::partitions::{enumerate_partitions, Partition};
use crate::scalars::{Poly, Rational, Scalar};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Basis {
    /// Power sums `p_λ`.
    Power,
    /// Monomial symmetric functions `m_λ`.
    Monomial,
}

impl Basis {
    pub fn tag(self) -> &'static str {
        match self {
            Basis::Power => "p",
            Basis::Monomial => "m",
        }
    }
}

/// Sparse symmetric function; zero coefficients are never stored.
#[derive(Clone, PartialEq)]
pub struct SymPoly<C> {
    basis: Basis,
    terms: BTreeMap<Partition, C>,
}

/// Change-of-basis data for one degree, rows indexed like `parts`.
pub struct DegreeTable {
    pub parts: Vec<Partition>,
    pub index: HashMap<Partition, usize>,
    /// `p_λ = Σ p2m[λ][μ] m_μ`.
    pub p2m: Vec<Vec<(usize, Rational)>>,
    /// `m_λ = Σ m2p[λ][μ] p_μ`.
    pub m2p: Vec<Vec<(usize, Rational)>>,
}

fn tables() -> &'static RwLock<HashMap<usize, Arc<DegreeTable>>> {
    static TABLES: OnceLock<RwLock<HashMap<usize, Arc<DegreeTable>>>> = OnceLock::new();
    TABLES.get_or_init(Default::default)
}

/// `p_r · m_μ` in the monomial basis (part-insertion rule).
pub fn power_times_monomial(r: usize, mu: &Partition) -> Vec<(Partition, usize)> {
    let mut out = Vec::new();
    for (v, _) in mu.multiplicities() {
        let nu = mu.remove_part(v).expect("part present").add_part(v + r);
        let c = nu.multiplicity(v + r);
        out.push((nu, c));
    }
    let nu = mu.add_part(r);
    let c = nu.multiplicity(r);
    out.push((nu, c));
    out
}

/// Cached conversion tables for degree `d`.
pub fn degree_table(d: usize) -> Arc<DegreeTable> {
    if let Some(t) = tables().read().expect("table lock").get(&d) {
        return t.clone();
    }
    let t = Arc::new(build_table(d));
    tables()
        .write()
        .expect("table lock")
        .entry(d)
        .or_insert(t)
        .clone()
}

fn build_table(d: usize) -> DegreeTable {
    let parts = enumerate_partitions(d, None);
    let index: HashMap<Partition, usize> = parts
        .iter()
        .cloned()
        .enumerate()
        .map(|(i, p)| (p, i))
        .collect();
    let n = parts.len();

    let mut p2m: Vec<Vec<(usize, Rational)>> = Vec::with_capacity(n);
    for lambda in &parts {
        if lambda.is_empty() {
            p2m.push(vec![(0, Rational::one())]);
            continue;
        }
        let first = lambda.parts()[0];
        let rest = lambda.remove_part(first).expect("nonempty");
        let sub = degree_table(rest.size());
        let mut row: BTreeMap<usize, BigInt> = BTreeMap::new();
        for (j, c) in &sub.p2m[sub.index[&rest]] {
            for (nu, k) in power_times_monomial(first, &sub.parts[*j]) {
                *row.entry(index[&nu]).or_default() += c.numer() * BigInt::from(k);
            }
        }
        p2m.push(
            row.into_iter()
                .map(|(j, c)| (j, Rational::from_integer(c)))
                .collect(),
        );
    }

    // p_λ is supported on μ ≥ λ, i.e. at indices ≤ index(λ); invert by forward substitution.
    let mut m2p: Vec<Vec<(usize, Rational)>> = Vec::with_capacity(n);
    for i in 0..n {
        let diag = p2m[i]
            .iter()
            .find(|(j, _)| *j == i)
            .expect("unitriangular support")
            .1
            .clone();
        let mut acc: BTreeMap<usize, Rational> = BTreeMap::new();
        acc.insert(i, Rational::one());
        for (j, c) in &p2m[i] {
            if *j == i {
                continue;
            }
            assert!(*j < i, "power sum supported above its own index");
            for (k, e) in &m2p[*j] {
                let v = acc.entry(*k).or_insert_with(Rational::zero);
                *v = &*v - c * e;
            }
        }
        m2p.push(
            acc.into_iter()
                .filter(|(_, v)| !Scalar::is_zero(v))
                .map(|(k, v)| (k, v / &diag))
                .collect(),
        );
    }
    DegreeTable {
        parts,
        index,
        p2m,
        m2p,
    }
}

impl<C: Scalar> SymPoly<C> {
    pub fn zero(basis: Basis) -> Self {
        SymPoly {
            basis,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(basis: Basis) -> Self {
        Self::term(basis, Partition::empty(), C::one())
    }

    pub fn term(basis: Basis, lambda: Partition, c: C) -> Self {
        let mut out = Self::zero(basis);
        out.add_term(lambda, c);
        out
    }

    pub fn p(lambda: Partition) -> Self {
        Self::term(Basis::Power, lambda, C::one())
    }

    pub fn m(lambda: Partition) -> Self {
        Self::term(Basis::Monomial, lambda, C::one())
    }

    pub fn from_terms<I: IntoIterator<Item = (Partition, C)>>(basis: Basis, terms: I) -> Self {
        let mut out = Self::zero(basis);
        for (l, c) in terms {
            out.add_term(l, c);
        }
        out
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn terms(&self) -> &BTreeMap<Partition, C> {
        &self.terms
    }

    /// Terms in reverse-lexicographic order.
    pub fn iter(&self) -> impl Iterator<Item = (&Partition, &C)> {
        self.terms.iter().rev()
    }

    pub fn coeff(&self, lambda: &Partition) -> C {
        self.terms.get(lambda).cloned().unwrap_or_else(C::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, lambda: Partition, c: C) {
        if c.is_zero() {
            return;
        }
        match self.terms.remove(&lambda) {
            Some(old) => {
                let s = old + c;
                if !s.is_zero() {
                    self.terms.insert(lambda, s);
                }
            }
            None => {
                self.terms.insert(lambda, c);
            }
        }
    }

    pub fn scale(&self, c: &C) -> Self {
        Self::from_terms(
            self.basis,
            self.terms
                .iter()
                .map(|(l, a)| (l.clone(), a.clone() * c.clone())),
        )
    }

    pub fn map_coeffs<D: Scalar>(&self, f: impl Fn(&C) -> D) -> SymPoly<D> {
        SymPoly::from_terms(
            self.basis,
            self.terms.iter().map(|(l, a)| (l.clone(), f(a))),
        )
    }

    pub fn add(&self, other: &Self) -> Self {
        let other = other.convert(self.basis);
        let mut out = self.clone();
        for (l, c) in other.terms {
            out.add_term(l, c);
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&-C::one()))
    }

    /// Degree-`d` component.
    pub fn homogeneous(&self, d: usize) -> Self {
        Self::from_terms(
            self.basis,
            self.terms
                .iter()
                .filter(|(l, _)| l.size() == d)
                .map(|(l, c)| (l.clone(), c.clone())),
        )
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut ds: Vec<usize> = self.terms.keys().map(Partition::size).collect();
        ds.sort_unstable();
        ds.dedup();
        ds
    }

    pub fn convert(&self, target: Basis) -> Self {
        if target == self.basis {
            return self.clone();
        }
        let mut out = Self::zero(target);
        for (lambda, c) in &self.terms {
            let t = degree_table(lambda.size());
            let rows = match self.basis {
                Basis::Power => &t.p2m,
                Basis::Monomial => &t.m2p,
            };
            for (j, e) in &rows[t.index[lambda]] {
                out.add_term(t.parts[*j].clone(), c.clone() * C::from_rational(e));
            }
        }
        out
    }

    /// Product in Λ, expressed in the basis of `self`.
    pub fn multiply(&self, other: &Self) -> Self {
        let a = self.convert(Basis::Power);
        let b = other.convert(Basis::Power);
        let mut out = Self::zero(Basis::Power);
        for (l, x) in &a.terms {
            for (m, y) in &b.terms {
                out.add_term(l.union(m), x.clone() * y.clone());
            }
        }
        out.convert(self.basis)
    }

    /// `⟨p_λ, p_μ⟩ = δ_{λμ} z_λ κ^{ℓ(λ)}`, extended bilinearly.
    pub fn inner_kappa(&self, other: &Self, kappa: &C) -> C {
        let a = self.convert(Basis::Power);
        let b = other.convert(Basis::Power);
        let mut acc = C::zero();
        for (l, x) in &a.terms {
            if let Some(y) = b.terms.get(l) {
                acc = acc
                    + x.clone()
                        * y.clone()
                        * C::from_rational(&l.z_factor())
                        * kappa.pow(l.len() as u32);
            }
        }
        acc
    }

    /// The endomorphism `p_r ↦ (−1)^{r−1} β p_r`.
    pub fn omega_endo(&self, beta: &C) -> Self {
        let a = self.convert(Basis::Power);
        SymPoly::from_terms(
            Basis::Power,
            a.terms.iter().map(|(l, c)| {
                let sign = l.parts().iter().map(|&r| r - 1).sum::<usize>() % 2;
                let mut v = c.clone() * beta.pow(l.len() as u32);
                if sign == 1 {
                    v = -v;
                }
                (l.clone(), v)
            }),
        )
    }

    /// `ε_X`: every `p_r ↦ X`.
    pub fn eval_eps(&self, x: &C) -> C {
        match self.basis {
            Basis::Power => self.terms.iter().fold(C::zero(), |acc, (l, c)| {
                acc + c.clone() * x.pow(l.len() as u32)
            }),
            Basis::Monomial => self.terms.iter().fold(C::zero(), |acc, (l, c)| {
                acc + c.clone() * eps_monomial(l, x)
            }),
        }
    }

    /// `ε_X` with `X = a·t + b`, as a polynomial in `t`.
    pub fn eval_eps_linear(&self, a: &C, b: &C) -> Poly<C> {
        let x = Poly::new(vec![b.clone(), a.clone()]);
        let mut acc = Poly::zero();
        for (l, c) in &self.terms {
            let v = match self.basis {
                Basis::Power => (0..l.len()).fold(Poly::one(), |p, _| &p * &x),
                Basis::Monomial => {
                    let f = (0..l.len()).fold(Poly::one(), |p, i| {
                        &p * &(&x - &Poly::constant(C::from_int(i as i64)))
                    });
                    f.scale(
                        &C::from_rational(&Rational::from_integer(l.multiplicity_factorial()))
                            .inv()
                            .expect("nonzero"),
                    )
                }
            };
            acc = &acc + &v.scale(c);
        }
        acc
    }

    /// Restriction to `N` variables: monomial basis, terms of length > N dropped.
    pub fn restrict_n(&self, n: usize) -> Self {
        let m = self.convert(Basis::Monomial);
        SymPoly::from_terms(
            Basis::Monomial,
            m.terms.into_iter().filter(|(l, _)| l.len() <= n),
        )
    }

    pub fn to_json(&self) -> Value {
        json!({
            "basis": self.basis.tag(),
            "terms": self.iter().map(|(l, c)| json!({"part": l.to_json(), "coef": c.to_json()})).collect::<Vec<_>>(),
        })
    }

    pub fn from_json_with(v: &Value, coef: impl Fn(&Value) -> Result<C>) -> Result<Self> {
        let basis = match v.get("basis").and_then(Value::as_str) {
            Some("p") => Basis::Power,
            Some("m") => Basis::Monomial,
            _ => return Err(Error::Parse("basis must be \"p\" or \"m\"".into())),
        };
        let terms = v
            .get("terms")
            .and_then(Value::as_array)
            .ok_or_else(|| Error::Parse("missing terms".into()))?;
        let mut out = Self::zero(basis);
        for t in terms {
            let part = Partition::from_json(t.get("part").unwrap_or(&Value::Null))?;
            let c = coef(t.get("coef").unwrap_or(&Value::Null))?;
            out.add_term(part, c);
        }
        Ok(out)
    }
}

/// `ε_X(m_λ) = X(X−1)⋯(X−ℓ+1) / ∏ m_i!`.
pub fn eps_monomial<C: Scalar>(lambda: &Partition, x: &C) -> C {
    let num = (0..lambda.len()).fold(C::one(), |acc, i| acc * (x.clone() - C::from_int(i as i64)));
    let den = Rational::from_integer(lambda.multiplicity_factorial());
    num * C::from_rational(&den.recip())
}

impl<C: Scalar> fmt::Display for SymPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let b = self.basis.tag();
        let parts: Vec<String> = self.iter().map(|(l, c)| format!("({c})·{b}{l}")).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl<C: Scalar> fmt::Debug for SymPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SymPoly[{self}]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::{rat, KappaFunction};

    type S = SymPoly<Rational>;

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec())
    }

    #[test]
    fn monomial_to_power() {
        let f = S::m(p(&[1, 1])).convert(Basis::Power);
        let expect = S::from_terms(
            Basis::Power,
            [(p(&[1, 1]), rat(1, 2)), (p(&[2]), rat(-1, 2))],
        );
        assert_eq!(f, expect);
        assert_eq!(S::p(p(&[1])).convert(Basis::Monomial), S::m(p(&[1])));
        let g = S::p(p(&[1, 1])).convert(Basis::Monomial);
        assert_eq!(
            g,
            S::from_terms(
                Basis::Monomial,
                [(p(&[2]), rat(1, 1)), (p(&[1, 1]), rat(2, 1))]
            )
        );
    }

    #[test]
    fn products() {
        assert_eq!(S::p(p(&[2])).multiply(&S::p(p(&[1]))), S::p(p(&[2, 1])));
        let sq = S::m(p(&[1])).multiply(&S::m(p(&[1])));
        assert_eq!(
            sq,
            S::from_terms(
                Basis::Monomial,
                [(p(&[2]), rat(1, 1)), (p(&[1, 1]), rat(2, 1))]
            )
        );
        let f = S::m(p(&[2, 1]));
        assert_eq!(f.multiply(&S::one(Basis::Monomial)), f);
    }

    #[test]
    fn kappa_inner_product() {
        let k = KappaFunction::kappa();
        let p2 = SymPoly::<KappaFunction>::p(p(&[2]));
        let p11 = SymPoly::<KappaFunction>::p(p(&[1, 1]));
        assert_eq!(
            p2.inner_kappa(&p2, &k),
            KappaFunction::from_int(2) * k.clone()
        );
        assert!(p2.inner_kappa(&p11, &k).is_zero());
        assert_eq!(
            p11.inner_kappa(&p11, &k),
            KappaFunction::from_int(2) * k.clone() * k
        );
    }

    #[test]
    fn omega() {
        let b = rat(5, 3);
        assert_eq!(
            S::p(p(&[2])).omega_endo(&b),
            S::term(Basis::Power, p(&[2]), -b.clone())
        );
        assert_eq!(
            S::p(p(&[1, 1])).omega_endo(&b),
            S::term(Basis::Power, p(&[1, 1]), &b * &b)
        );
        assert_eq!(S::p(p(&[3, 1])).omega_endo(&rat(1, 1)), S::p(p(&[3, 1])));
    }

    #[test]
    fn evaluation() {
        let x = rat(7, 2);
        assert_eq!(S::p(p(&[2, 1])).eval_eps(&x), &x * &x);
        assert_eq!(
            S::m(p(&[1, 1])).eval_eps(&x),
            &x * (&x - rat(1, 1)) / rat(2, 1)
        );
        assert_eq!(
            S::m(p(&[1, 1])).convert(Basis::Power).eval_eps(&x),
            &x * (&x - rat(1, 1)) / rat(2, 1)
        );
        assert_eq!(S::one(Basis::Power).eval_eps(&x), rat(1, 1));
    }

    #[test]
    fn linear_evaluation_matches_pointwise() {
        let f = S::m(p(&[2, 1, 1])).add(&S::p(p(&[3, 1])));
        let poly = f.eval_eps_linear(&rat(2, 1), &rat(-1, 3));
        for t in [rat(0, 1), rat(1, 2), rat(-4, 1)] {
            let x = rat(2, 1) * &t - rat(1, 3);
            assert_eq!(poly.eval(&t), f.eval_eps(&x));
        }
    }

    #[test]
    fn restriction() {
        assert!(S::m(p(&[1, 1, 1])).restrict_n(2).is_zero());
        assert_eq!(S::m(p(&[2])).restrict_n(1), S::m(p(&[2])));
        assert_eq!(S::p(p(&[1, 1])).restrict_n(1), S::m(p(&[2])));
    }

    #[test]
    fn json_roundtrip() {
        let f = S::m(p(&[1, 1])).convert(Basis::Power);
        let back = S::from_json_with(&f.to_json(), crate::scalars::rational_from_json).unwrap();
        assert_eq!(back, f);
    }
}
