//! Model parameters, Fock modules `F_β`, and their Heisenberg and Virasoro actions.

use std::collections::BTreeMap;
use std::fmt;

use num_integer::Integer;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::linalg::nullspace;
use crate::partitions::{enumerate_partitions, Partition};
use crate::scalars::{rat, EpsSeries, QuadScalar, Rational, Scalar, DEFAULT_ORDER};
use crate::symfun::{Basis, SymPoly};

/// Free-field data of the `(p₊, p₋)` model.
#[derive(Debug, Clone, PartialEq)]
pub struct ModelParams {
    pub pp: i64,
    pub pm: i64,
    /// Discriminant `2p₋/p₊` of the coefficient field.
    pub d: Rational,
    pub alpha_plus: QuadScalar,
    pub alpha_minus: QuadScalar,
    pub alpha0: QuadScalar,
    pub alpha: QuadScalar,
    pub kappa_plus: Rational,
    pub kappa_minus: Rational,
    pub c: Rational,
}

impl ModelParams {
    pub fn new(pp: i64, pm: i64) -> Result<Self> {
        if pp < 2 || pm < 2 {
            return Err(Error::OutOfRange(format!(
                "p+ = {pp}, p- = {pm} must both be at least 2"
            )));
        }
        if pp.gcd(&pm) != 1 {
            return Err(Error::NotCoprime(pp, pm));
        }
        let d = rat(2 * pm, pp);
        let alpha_plus = QuadScalar::sqrt(d.clone());
        let alpha_minus = alpha_plus.scale(&rat(-pp, pm));
        let alpha0 = alpha_plus.clone() + alpha_minus.clone();
        let alpha = alpha_plus.scale(&rat(pp, 1));
        Ok(ModelParams {
            pp,
            pm,
            d,
            alpha_plus,
            alpha_minus,
            alpha0,
            alpha,
            kappa_plus: rat(pm, pp),
            kappa_minus: rat(pp, pm),
            c: rat(1, 1) - rat(6 * (pp - pm) * (pp - pm), pp * pm),
        })
    }

    /// `β_{r,s} = (1−r)/2·α₊ + (1−s)/2·α₋`.
    pub fn beta_rs(&self, r: i64, s: i64) -> QuadScalar {
        self.alpha_plus.scale(&rat(1 - r, 2)) + self.alpha_minus.scale(&rat(1 - s, 2))
    }

    /// `h_{r,s} = (r²−1)/4·κ₊ − (rs−1)/2 + (s²−1)/4·κ₋`.
    pub fn h_rs(&self, r: i64, s: i64) -> Rational {
        rat(r * r - 1, 4) * &self.kappa_plus - rat(r * s - 1, 2)
            + rat(s * s - 1, 4) * &self.kappa_minus
    }

    /// `h_{r,s;n} = h_{r−np₊,s}`.
    pub fn h_label(&self, r: i64, s: i64, n: i64) -> Rational {
        self.h_rs(r - n * self.pp, s)
    }

    /// `h_β = ½β(β−α₀)`.
    pub fn h_of_beta(&self, beta: &QuadScalar) -> QuadScalar {
        (beta.clone() * (beta.clone() - self.alpha0.clone())).scale(&rat(1, 2))
    }

    pub fn weight(&self, r: i64, s: i64, n: i64) -> FockWeight {
        let beta = self.beta_rs(r - n * self.pp, s);
        FockWeight {
            label: Some((r, s, n)),
            h: self.h_of_beta(&beta),
            beta,
        }
    }

    pub fn raw_weight(&self, beta: QuadScalar) -> FockWeight {
        FockWeight {
            label: None,
            h: self.h_of_beta(&beta),
            beta,
        }
    }

    /// The contragredient weight `α₀ − β`, labelled `(−r,−s;−n)` when labelled.
    pub fn dual_weight(&self, w: &FockWeight) -> FockWeight {
        FockWeight {
            label: w.label.map(|(r, s, n)| (-r, -s, -n)),
            beta: self.alpha0.clone() - w.beta.clone(),
            h: w.h.clone(),
        }
    }
}

pub fn model(pp: i64, pm: i64) -> Result<ModelParams> {
    ModelParams::new(pp, pm)
}

/// Heisenberg weight with its conformal weight and optional Kac label `(r,s;n)`.
#[derive(Debug, Clone, PartialEq)]
pub struct FockWeight {
    pub label: Option<(i64, i64, i64)>,
    pub beta: QuadScalar,
    pub h: QuadScalar,
}

impl FockWeight {
    pub fn to_json(&self) -> Value {
        match self.label {
            Some((r, s, n)) => json!({"r": r, "s": s, "n": n}),
            None => json!({"value": self.beta.to_json()}),
        }
    }
}

/// Finite combination of monomials `b_{−λ}|β⟩`.
#[derive(Clone, PartialEq)]
pub struct FockElement {
    pub weight: FockWeight,
    terms: BTreeMap<Partition, QuadScalar>,
}

impl FockElement {
    pub fn zero(weight: FockWeight) -> Self {
        FockElement {
            weight,
            terms: BTreeMap::new(),
        }
    }

    pub fn vacuum(weight: FockWeight) -> Self {
        Self::monomial(weight, Partition::empty(), QuadScalar::one())
    }

    pub fn monomial(weight: FockWeight, lambda: Partition, c: QuadScalar) -> Self {
        let mut out = Self::zero(weight);
        out.add_term(lambda, c);
        out
    }

    pub fn from_terms<I: IntoIterator<Item = (Partition, QuadScalar)>>(
        weight: FockWeight,
        terms: I,
    ) -> Self {
        let mut out = Self::zero(weight);
        for (l, c) in terms {
            out.add_term(l, c);
        }
        out
    }

    pub fn terms(&self) -> &BTreeMap<Partition, QuadScalar> {
        &self.terms
    }

    pub fn coeff(&self, lambda: &Partition) -> QuadScalar {
        self.terms
            .get(lambda)
            .cloned()
            .unwrap_or_else(QuadScalar::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// The grade if the element is homogeneous and nonzero.
    pub fn grade(&self) -> Option<usize> {
        let mut it = self.terms.keys().map(Partition::size);
        let g = it.next()?;
        it.all(|x| x == g).then_some(g)
    }

    pub fn add_term(&mut self, lambda: Partition, c: QuadScalar) {
        if c.is_zero() {
            return;
        }
        let v = match self.terms.remove(&lambda) {
            Some(old) => old + c,
            None => c,
        };
        if !v.is_zero() {
            self.terms.insert(lambda, v);
        }
    }

    pub fn scale(&self, c: &QuadScalar) -> Self {
        Self::from_terms(
            self.weight.clone(),
            self.terms
                .iter()
                .map(|(l, a)| (l.clone(), a.clone() * c.clone())),
        )
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (l, c) in &other.terms {
            out.add_term(l.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&-QuadScalar::one()))
    }

    /// The unique `c` with `self = c·other`, if any.
    pub fn ratio_to(&self, other: &Self) -> Option<QuadScalar> {
        let (l, b) = other.terms.iter().next()?;
        let c = self.coeff(l).div(b).ok()?;
        (self.sub(&other.scale(&c)).is_zero()).then_some(c)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "beta": self.weight.to_json(),
            "terms": self.terms.iter().rev().map(|(l, c)| json!({"part": l.to_json(), "coef": c.to_json()})).collect::<Vec<_>>(),
        })
    }
}

impl fmt::Display for FockElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .rev()
            .map(|(l, c)| format!("({c})·b_{{-{l}}}"))
            .collect();
        write!(f, "{}|β⟩", parts.join(" + "))
    }
}

impl fmt::Debug for FockElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FockElement[{self}]")
    }
}

/// `b_n` on a single monomial.
fn mode_on_monomial(
    lambda: &Partition,
    n: i64,
    beta: &QuadScalar,
) -> Option<(Partition, QuadScalar)> {
    match n {
        0 => Some((lambda.clone(), beta.clone())),
        n if n < 0 => Some((lambda.add_part((-n) as usize), QuadScalar::one())),
        n => {
            let k = n as usize;
            let mult = lambda.multiplicity(k);
            (mult > 0).then(|| {
                (
                    lambda.remove_part(k).expect("present"),
                    QuadScalar::from_int((k * mult) as i64),
                )
            })
        }
    }
}

/// `b_n v` with `[b_m, b_n] = m δ_{m,−n}`.
pub fn heisenberg_apply(v: &FockElement, n: i64) -> FockElement {
    let mut out = FockElement::zero(v.weight.clone());
    for (l, c) in &v.terms {
        if let Some((mu, k)) = mode_on_monomial(l, n, &v.weight.beta) {
            out.add_term(mu, c.clone() * k);
        }
    }
    out
}

/// `L_n = ½ Σ_k :b_{n−k} b_k: − (α₀/2)(n+1) b_n`.
pub fn virasoro_apply(model: &ModelParams, v: &FockElement, n: i64) -> FockElement {
    let beta = &v.weight.beta;
    let half = rat(1, 2);
    let mut out = FockElement::zero(v.weight.clone());
    for (l, c) in &v.terms {
        let g = l.size() as i64;
        // Normal order: the larger mode j acts first.
        let mut j = Integer::div_ceil(&n, &2);
        while j <= g {
            let mult = if n - j == j { rat(1, 1) } else { rat(2, 1) };
            if let Some((mu, k1)) = mode_on_monomial(l, j, beta) {
                if let Some((nu, k2)) = mode_on_monomial(&mu, n - j, beta) {
                    out.add_term(nu, c.clone() * k1 * k2.scale(&(&mult * &half)));
                }
            }
            j += 1;
        }
        if let Some((mu, k)) = mode_on_monomial(l, n, beta) {
            let lin = model.alpha0.scale(&rat(-(n + 1), 2));
            out.add_term(mu, c.clone() * k * lin);
        }
    }
    out
}

/// The algebra map `p_λ ↦ γ^{ℓ(λ)} b_{−λ}` applied to `|target⟩`.
pub fn rho_gamma(f: &SymPoly<QuadScalar>, gamma: &QuadScalar, target: FockWeight) -> FockElement {
    let p = f.convert(Basis::Power);
    FockElement::from_terms(
        target,
        p.terms()
            .iter()
            .map(|(l, c)| (l.clone(), c.clone() * gamma.pow(l.len() as u32))),
    )
}

pub const SINGULAR_LEVEL_GUARD: usize = 12;

/// Basis of the grade-`level` vectors killed by `L₁` and `L₂`.
pub fn singular_space(
    model: &ModelParams,
    weight: &FockWeight,
    level: usize,
) -> Result<Vec<FockElement>> {
    if level > SINGULAR_LEVEL_GUARD {
        return Err(Error::SizeGuardExceeded(format!(
            "level {level} > {SINGULAR_LEVEL_GUARD}"
        )));
    }
    let cols = enumerate_partitions(level, None);
    let mut rows: Vec<Vec<QuadScalar>> = Vec::new();
    for (n, drop) in [(1i64, 1usize), (2, 2)] {
        if level < drop {
            continue;
        }
        let targets = enumerate_partitions(level - drop, None);
        let images: Vec<FockElement> = cols
            .iter()
            .map(|l| {
                virasoro_apply(
                    model,
                    &FockElement::monomial(weight.clone(), l.clone(), QuadScalar::one()),
                    n,
                )
            })
            .collect();
        for t in &targets {
            rows.push(images.iter().map(|img| img.coeff(t)).collect());
        }
    }
    Ok(nullspace(rows, cols.len())?
        .into_iter()
        .map(|v| FockElement::from_terms(weight.clone(), cols.iter().cloned().zip(v)))
        .collect())
}

/// Bilinear pairing `F_β × F_{α₀−β} → Q(√D)` induced by `σ(b_n) = δ_{n,0}α₀ − b_{−n}`:
/// `⟨b_{−λ}|β⟩, w⟩` is the vacuum coefficient of `σ(b_{−λ}) w`.
pub fn contragredient_pairing(
    model: &ModelParams,
    u: &FockElement,
    w: &FockElement,
) -> Result<QuadScalar> {
    if model.alpha0.clone() - u.weight.beta.clone() != w.weight.beta {
        return Err(Error::OutOfRange("pairing requires dual weights".into()));
    }
    let mut acc = QuadScalar::zero();
    for (l, c) in &u.terms {
        let mut x = w.clone();
        for &part in l.parts() {
            x = heisenberg_apply(&x, part as i64).scale(&-QuadScalar::one());
        }
        acc = acc + c.clone() * x.coeff(&Partition::empty());
    }
    Ok(acc)
}

/// Deformation `α₊(ε)` of the free-field parameters over `O/(ε^K)`.
#[derive(Debug, Clone, PartialEq)]
pub struct DeformedModel<const K: usize = DEFAULT_ORDER> {
    pub model: ModelParams,
    pub alpha_plus: EpsSeries<QuadScalar, K>,
    pub alpha_minus: EpsSeries<QuadScalar, K>,
    pub alpha0: EpsSeries<QuadScalar, K>,
    pub kappa_plus: EpsSeries<QuadScalar, K>,
    pub kappa_minus: EpsSeries<QuadScalar, K>,
}

pub fn deform<const K: usize>(
    model: &ModelParams,
    alpha_plus: EpsSeries<QuadScalar, K>,
) -> Result<DeformedModel<K>> {
    if *alpha_plus.constant_term() != model.alpha_plus {
        return Err(Error::BadConstantTerm);
    }
    if K < 2 || alpha_plus.coeff(1).is_zero() {
        return Err(Error::ZeroFirstOrder);
    }
    let minus_two = EpsSeries::<QuadScalar, K>::from_int(-2);
    let alpha_minus = minus_two * alpha_plus.inv()?;
    let half = EpsSeries::<QuadScalar, K>::from_rational(&rat(1, 2));
    Ok(DeformedModel {
        model: model.clone(),
        alpha0: alpha_plus.clone() + alpha_minus.clone(),
        kappa_plus: half.clone() * alpha_plus.clone() * alpha_plus.clone(),
        kappa_minus: half * alpha_minus.clone() * alpha_minus.clone(),
        alpha_plus,
        alpha_minus,
    })
}

impl<const K: usize> DeformedModel<K> {
    /// `h_{r,s}(ε) = (r²−1)/4·κ₊(ε) − (rs−1)/2 + (s²−1)/4·κ₋(ε)`.
    pub fn h_eps(&self, r: i64, s: i64) -> EpsSeries<QuadScalar, K> {
        self.kappa_plus.scale(&rat(r * r - 1, 4)) - EpsSeries::from_rational(&rat(r * s - 1, 2))
            + self.kappa_minus.scale(&rat(s * s - 1, 4))
    }

    /// `β_{r,s}(ε) = (1−r)/2·α₊(ε) + (1−s)/2·α₋(ε)`.
    pub fn beta_eps(&self, r: i64, s: i64) -> EpsSeries<QuadScalar, K> {
        self.alpha_plus.scale(&rat(1 - r, 2)) + self.alpha_minus.scale(&rat(1 - s, 2))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::partition_counts;

    fn m23() -> ModelParams {
        ModelParams::new(2, 3).unwrap()
    }

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec())
    }

    #[test]
    fn central_charges() {
        assert_eq!(m23().c, rat(0, 1));
        assert_eq!(ModelParams::new(2, 5).unwrap().c, rat(-22, 5));
        assert_eq!(ModelParams::new(3, 4).unwrap().c, rat(1, 2));
        assert_eq!(ModelParams::new(2, 4), Err(Error::NotCoprime(2, 4)));
        assert!(matches!(ModelParams::new(1, 3), Err(Error::OutOfRange(_))));
    }

    #[test]
    fn parameter_relations() {
        for (a, b) in [(2, 3), (2, 5), (3, 4), (2, 9)] {
            let m = ModelParams::new(a, b).unwrap();
            assert_eq!(
                m.alpha_plus.clone() * m.alpha_minus.clone(),
                QuadScalar::from_int(-2)
            );
            assert_eq!(
                m.alpha_plus.pow(2).scale(&rat(1, 2)),
                QuadScalar::from_rational(&m.kappa_plus)
            );
            assert_eq!(m.alpha.clone(), m.alpha_minus.scale(&rat(-b, 1)));
            assert_eq!(
                m.c.clone(),
                rat(1, 1) - m.alpha0.pow(2).as_rational().unwrap() * rat(3, 1)
            );
        }
    }

    #[test]
    fn weights() {
        let m = ModelParams::new(2, 5).unwrap();
        assert_eq!(m.weight(1, 2, 0).h, QuadScalar::from_rational(&rat(-1, 5)));
        assert_eq!(m.weight(1, 1, 0).h, QuadScalar::zero());
        assert_eq!(m23().weight(1, 1, -1).h, QuadScalar::from_int(2));
        for r in -4..=4 {
            for s in -4..=4 {
                for n in -2..=2 {
                    let w = m.weight(r, s, n);
                    assert_eq!(w.h, QuadScalar::from_rational(&m.h_label(r, s, n)));
                }
            }
        }
    }

    #[test]
    fn heisenberg_modes() {
        let w = m23().weight(1, 2, 0);
        let v = FockElement::monomial(w.clone(), p(&[1]), QuadScalar::one());
        assert_eq!(heisenberg_apply(&v, 1), FockElement::vacuum(w.clone()));
        let vac = FockElement::vacuum(w.clone());
        assert_eq!(heisenberg_apply(&vac, 0), vac.scale(&w.beta));
        assert!(heisenberg_apply(&vac, 2).is_zero());
    }

    #[test]
    fn virasoro_on_low_states() {
        let m = m23();
        let w = m.weight(2, 1, 0);
        let vac = FockElement::vacuum(w.clone());
        assert_eq!(virasoro_apply(&m, &vac, 0), vac.scale(&w.h));
        let v = FockElement::monomial(w.clone(), p(&[1]), QuadScalar::one());
        assert_eq!(
            virasoro_apply(&m, &v, 1),
            vac.scale(&(w.beta.clone() - m.alpha0.clone()))
        );
        let zero = FockElement::vacuum(m.weight(1, 1, 0));
        assert!(virasoro_apply(&m, &zero, -1).is_zero());
    }

    #[test]
    fn grade_dimensions() {
        let counts = partition_counts(10);
        for n in 0..=10 {
            assert_eq!(enumerate_partitions(n, None).len() as u64, counts[n]);
        }
    }

    #[test]
    fn singular_space_examples() {
        let m = m23();
        let w = m.weight(-1, -1, 0);
        assert_eq!(w.beta, m.alpha0);
        let sp = singular_space(&m, &w, 1).unwrap();
        assert_eq!(sp.len(), 1);
        assert_eq!(sp[0].terms().keys().collect::<Vec<_>>(), vec![&p(&[1])]);
        let generic = m.raw_weight(QuadScalar::from_rational(&rat(1, 7)));
        assert!(singular_space(&m, &generic, 1).unwrap().is_empty());
        let at0 = singular_space(&m, &generic, 0).unwrap();
        assert_eq!(at0, vec![FockElement::vacuum(generic)]);
        assert!(matches!(
            singular_space(&m, &w, 13),
            Err(Error::SizeGuardExceeded(_))
        ));
    }

    #[test]
    fn rho_examples() {
        let m = m23();
        let w = m.weight(1, 1, 0);
        let g = m.alpha_plus.clone();
        let f = SymPoly::<QuadScalar>::p(p(&[2]));
        assert_eq!(
            rho_gamma(&f, &g, w.clone()),
            FockElement::monomial(w.clone(), p(&[2]), g.clone())
        );
        let f = SymPoly::<QuadScalar>::m(p(&[1, 1]));
        let expect = FockElement::from_terms(
            w.clone(),
            [
                (p(&[1, 1]), g.pow(2).scale(&rat(1, 2))),
                (p(&[2]), g.scale(&rat(-1, 2))),
            ],
        );
        assert_eq!(rho_gamma(&f, &g, w), expect);
    }

    #[test]
    fn deformation() {
        let m = m23();
        let ap = EpsSeries::<QuadScalar, 3>::linear(m.alpha_plus.clone(), m.alpha_plus.clone());
        let dm = deform(&m, ap).unwrap();
        let am = m.alpha_minus.clone();
        let expect = EpsSeries::<QuadScalar, 3>::new(vec![am.clone(), -am.clone(), am]);
        assert_eq!(dm.alpha_minus, expect);
        assert!(dm.h_eps(1, 1).is_zero());
        assert_eq!(
            *dm.kappa_minus.constant_term(),
            QuadScalar::from_rational(&rat(2, 3))
        );
        let bad = EpsSeries::<QuadScalar, 3>::linear(QuadScalar::one(), QuadScalar::one());
        assert_eq!(deform(&m, bad), Err(Error::BadConstantTerm));
        let flat = EpsSeries::<QuadScalar, 3>::constant(m.alpha_plus.clone());
        assert_eq!(deform(&m, flat), Err(Error::ZeroFirstOrder));
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn monomial_at(grade: usize, pick: usize, w: FockWeight) -> FockElement {
            let ps = enumerate_partitions(grade, None);
            FockElement::monomial(w, ps[pick % ps.len()].clone(), QuadScalar::one())
        }

        fn models() -> impl Strategy<Value = ModelParams> {
            prop_oneof![Just((2, 3)), Just((2, 5)), Just((3, 4))]
                .prop_map(|(a, b)| ModelParams::new(a, b).unwrap())
        }

        proptest! {
            #[test]
            fn virasoro_bracket(m in models(), r in -3i64..4, s in -3i64..4, k in -1i64..2,
                                g in 0usize..5, pick in 0usize..8, a in -3i64..4, b in -3i64..4) {
                let v = monomial_at(g, pick, m.weight(r, s, k));
                let lhs = virasoro_apply(&m, &virasoro_apply(&m, &v, b), a)
                    .sub(&virasoro_apply(&m, &virasoro_apply(&m, &v, a), b));
                let mut rhs = virasoro_apply(&m, &v, a + b).scale(&QuadScalar::from_int(a - b));
                if a + b == 0 {
                    let central = m.c.clone() * rat(a * a * a - a, 12);
                    rhs = rhs.add(&v.scale(&QuadScalar::from_rational(&central)));
                }
                prop_assert_eq!(lhs, rhs);
            }

            #[test]
            fn heisenberg_bracket(m in models(), g in 0usize..5, pick in 0usize..8, a in -3i64..4, b in -3i64..4) {
                let v = monomial_at(g, pick, m.weight(1, 2, 0));
                let lhs = heisenberg_apply(&heisenberg_apply(&v, b), a)
                    .sub(&heisenberg_apply(&heisenberg_apply(&v, a), b));
                let rhs = if a + b == 0 { v.scale(&QuadScalar::from_int(a)) } else { FockElement::zero(v.weight.clone()) };
                prop_assert_eq!(lhs, rhs);
            }

            #[test]
            fn virasoro_shifts_grade(m in models(), g in 0usize..6, pick in 0usize..10, a in -3i64..4) {
                let v = monomial_at(g, pick, m.weight(2, 1, 0));
                let out = virasoro_apply(&m, &v, a);
                if let Some(h) = out.grade() {
                    prop_assert_eq!(h as i64, g as i64 - a);
                }
            }

            #[test]
            fn sigma_is_contragredient(m in models(), r in -2i64..3, s in -2i64..3, g in 0usize..5,
                                       p1 in 0usize..8, p2 in 0usize..8, n in -3i64..4) {
                let w = m.weight(r, s, 0);
                prop_assume!(g as i64 - n >= 0);
                let u = monomial_at(g, p1, w.clone());
                let v = monomial_at((g as i64 - n) as usize, p2, m.dual_weight(&w));
                let lhs = contragredient_pairing(&m, &virasoro_apply(&m, &u, n), &v).unwrap();
                let rhs = contragredient_pairing(&m, &u, &virasoro_apply(&m, &v, -n)).unwrap();
                prop_assert_eq!(lhs, rhs);
            }
        }
    }
}
