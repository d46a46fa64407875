//! Truncated q-characters: Fock modules, their socle constituents, simple
//! Virasoro characters by triangular elimination, Felder Euler
//! characteristics and the `K±`/`X±` character identities.

use std::collections::BTreeMap;
use std::fmt;

use num_integer::Integer;
use num_traits::ToPrimitive;
use serde_json::{json, Value};

use crate::certificate::Certificate;
use crate::error::{Error, Result};
use crate::fock::ModelParams;
use crate::partitions::partition_counts;
use crate::scalars::{rat, Rational};
use crate::screening::{extended_weight, Sign};

/// `Σ_k c_k q^{offset+k}` for `k ≤ cutoff`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CharSeries {
    pub offset: Rational,
    pub coeffs: Vec<i64>,
}

fn integer_gap(a: &Rational, b: &Rational) -> Option<i64> {
    let d = a - b;
    d.is_integer().then(|| d.to_integer().to_i64()).flatten()
}

impl CharSeries {
    pub fn new(offset: Rational, coeffs: Vec<i64>) -> Self {
        CharSeries { offset, coeffs }
    }

    pub fn zero(offset: Rational, cutoff: usize) -> Self {
        CharSeries {
            offset,
            coeffs: vec![0; cutoff + 1],
        }
    }

    pub fn cutoff(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Highest exponent covered.
    pub fn top(&self) -> Rational {
        &self.offset + rat(self.cutoff() as i64, 1)
    }

    pub fn is_nonnegative(&self) -> bool {
        self.coeffs.iter().all(|&c| c >= 0)
    }

    pub fn truncate(&self, cutoff: usize) -> Self {
        CharSeries {
            offset: self.offset.clone(),
            coeffs: self.coeffs[..=cutoff.min(self.cutoff())].to_vec(),
        }
    }

    /// The same series re-expanded from `offset`, covering exponents up to `top`.
    pub fn realign(&self, offset: &Rational, top: &Rational) -> Result<Self> {
        let shift = integer_gap(&self.offset, offset).ok_or_else(|| {
            Error::OutOfRange(format!(
                "offsets {} and {offset} are not congruent",
                self.offset
            ))
        })?;
        let len = integer_gap(top, offset)
            .filter(|&l| l >= 0)
            .ok_or_else(|| Error::OutOfRange(format!("window [{offset}, {top}]")))?;
        if *top > self.top() && shift <= len {
            return Err(Error::OutOfRange(format!(
                "series known to {} only, {top} requested",
                self.top()
            )));
        }
        let mut coeffs = vec![0; len as usize + 1];
        for (k, c) in coeffs.iter_mut().enumerate() {
            let j = k as i64 - shift;
            if j >= 0 && (j as usize) < self.coeffs.len() {
                *c = self.coeffs[j as usize];
            }
        }
        Ok(CharSeries {
            offset: offset.clone(),
            coeffs,
        })
    }

    /// Sum over the common window; offsets must differ by an integer.
    pub fn add(&self, other: &Self) -> Result<Self> {
        self.combine(other, 1)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.combine(other, -1)
    }

    pub fn scale(&self, c: i64) -> Self {
        CharSeries {
            offset: self.offset.clone(),
            coeffs: self.coeffs.iter().map(|x| x * c).collect(),
        }
    }

    fn combine(&self, other: &Self, sign: i64) -> Result<Self> {
        integer_gap(&self.offset, &other.offset).ok_or_else(|| {
            Error::OutOfRange(format!(
                "disjoint supports {} and {}",
                self.offset, other.offset
            ))
        })?;
        let offset = self.offset.clone().min(other.offset.clone());
        let top = self.top().min(other.top());
        let mut out = self.realign(&offset, &top)?;
        let b = other.realign(&offset, &top)?;
        for (x, y) in out.coeffs.iter_mut().zip(&b.coeffs) {
            *x += sign * y;
        }
        Ok(out)
    }

    pub fn to_json(&self) -> Value {
        json!({"offset": self.offset.to_string(), "coeffs": self.coeffs})
    }
}

impl fmt::Display for CharSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(k, c)| format!("{c}q^{}", &self.offset + rat(k as i64, 1)))
            .collect();
        if terms.is_empty() {
            write!(f, "0 + O(q^{})", self.top() + rat(1, 1))
        } else {
            write!(f, "{} + O(q^{})", terms.join(" + "), self.top() + rat(1, 1))
        }
    }
}

/// `ch F_{r,s;n} = q^{h_{r,s;n}} Σ p(k) q^k`.
pub fn fock_character(model: &ModelParams, r: i64, s: i64, n: i64, cutoff: usize) -> CharSeries {
    let p = partition_counts(cutoff);
    CharSeries::new(
        model.h_label(r, s, n),
        p.iter().map(|&x| x as i64).collect(),
    )
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SocleCase {
    /// `r < p₊`, `s < p₋`
    I,
    /// `r = p₊`, `s < p₋`
    IIPlus,
    /// `r < p₊`, `s = p₋`
    IIMinus,
    /// `r = p₊`, `s = p₋`
    III,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SocleData {
    pub label: (i64, i64, i64),
    pub case: SocleCase,
    /// Constituent weights of `S₁, S₂, …`, each up to the requested bound.
    pub components: Vec<Vec<Rational>>,
}

impl SocleData {
    pub fn all(&self) -> impl Iterator<Item = &Rational> {
        self.components.iter().flatten()
    }

    pub fn to_json(&self) -> Value {
        json!({
            "label": [self.label.0, self.label.1, self.label.2],
            "case": format!("{:?}", self.case),
            "components": self.components.iter().map(|c| c.iter().map(|h| h.to_string()).collect::<Vec<_>>()).collect::<Vec<_>>(),
        })
    }
}

/// `h_{a,b;j}` for `j = base + 2k`, `k ≥ start`, up to `bound`.
fn ladder(
    model: &ModelParams,
    a: i64,
    b: i64,
    base: i64,
    start: i64,
    bound: &Rational,
) -> Vec<Rational> {
    let mut out = Vec::new();
    for k in start.. {
        let j = base + 2 * k;
        let h = model.h_label(a, b, j);
        if h <= *bound {
            out.push(h);
        } else if j >= 1 {
            break;
        }
    }
    out
}

pub fn socle_case(model: &ModelParams, r: i64, s: i64) -> Result<SocleCase> {
    let (pp, pm) = (model.pp, model.pm);
    if !(1..=pp).contains(&r) || !(1..=pm).contains(&s) {
        return Err(Error::OutOfRange(format!("(r,s) = ({r},{s})")));
    }
    Ok(match (r < pp, s < pm) {
        (true, true) => SocleCase::I,
        (false, true) => SocleCase::IIPlus,
        (true, false) => SocleCase::IIMinus,
        (false, false) => SocleCase::III,
    })
}

/// Socle constituents of `F_{r,s;n}` with weight at most `h_{r,s;n} + cutoff`.
pub fn socle_constituents(
    model: &ModelParams,
    r: i64,
    s: i64,
    n: i64,
    cutoff: usize,
) -> Result<SocleData> {
    let case = socle_case(model, r, s)?;
    let bound = model.h_label(r, s, n) + rat(cutoff as i64, 1);
    Ok(socle_to_bound(model, r, s, n, case, &bound))
}

fn socle_to_bound(
    model: &ModelParams,
    r: i64,
    s: i64,
    n: i64,
    case: SocleCase,
    bound: &Rational,
) -> SocleData {
    let (pp, pm) = (model.pp, model.pm);
    let an = n.abs();
    let components = match case {
        SocleCase::I => {
            let a = if n >= 0 { 0 } else { 1 };
            let mut s2 = ladder(model, r, s, an, a, bound);
            s2.extend(ladder(model, pp - r, pm - s, an, 1 - a, bound));
            vec![
                ladder(model, r, pm - s, an + 1, 0, bound),
                s2,
                ladder(model, pp - r, s, an + 1, 0, bound),
            ]
        }
        SocleCase::IIPlus => {
            let a = if n >= 1 { 0 } else { 1 };
            vec![
                ladder(model, pp, pm - s, an + 1, 0, bound),
                ladder(model, pp, s, an, a, bound),
            ]
        }
        SocleCase::IIMinus => {
            let a = if n >= 0 { 1 } else { 0 };
            vec![
                ladder(model, r, pm, an, 0, bound),
                ladder(model, pp - r, pm, an - 1, a, bound),
            ]
        }
        SocleCase::III => vec![ladder(model, pp, pm, an, 0, bound)],
    };
    SocleData {
        label: (r, s, n),
        case,
        components,
    }
}

/// All labels `(r,s;n)` with `h_{r,s;n} ≤ bound`.
fn labels_below(model: &ModelParams, bound: &Rational) -> Vec<(Rational, (i64, i64, i64))> {
    let mut out = Vec::new();
    for r in 1..=model.pp {
        for s in 1..=model.pm {
            for dir in [1, -1] {
                let mut n = if dir == 1 { 0 } else { -1 };
                loop {
                    let h = model.h_label(r, s, n);
                    if h <= *bound {
                        out.push((h, (r, s, n)));
                    } else if n.abs() >= 2 {
                        break;
                    }
                    n += dir;
                }
            }
        }
    }
    out
}

/// Simple characters `ch L(h)` valid up to the common weight `window`.
#[derive(Debug, Clone, PartialEq)]
pub struct SimpleCharacters {
    pub window: Rational,
    pub chars: BTreeMap<Rational, CharSeries>,
    /// Every label used, with its weight.
    pub labels: Vec<(Rational, (i64, i64, i64))>,
}

impl SimpleCharacters {
    pub fn get(&self, h: &Rational) -> Result<&CharSeries> {
        self.chars
            .get(h)
            .ok_or_else(|| Error::OutOfRange(format!("no solved character at weight {h}")))
    }

    /// `Σ_h mult(h)·ch L(h)` re-expanded on `[offset, top]`.
    pub fn combination<'a, I>(
        &self,
        weights: I,
        offset: &Rational,
        top: &Rational,
    ) -> Result<CharSeries>
    where
        I: IntoIterator<Item = (&'a Rational, i64)>,
    {
        if *top > self.window {
            return Err(Error::OutOfRange(format!(
                "requested {top} beyond solved window {}",
                self.window
            )));
        }
        let len = integer_gap(top, offset).ok_or_else(|| Error::OutOfRange("window".into()))?;
        let mut acc = CharSeries::zero(offset.clone(), len as usize);
        for (h, m) in weights {
            if h > top {
                continue;
            }
            let c = self.get(h)?.realign(offset, top)?;
            for (x, y) in acc.coeffs.iter_mut().zip(&c.coeffs) {
                *x += m * y;
            }
        }
        Ok(acc)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "window": self.window.to_string(),
            "chars": self.chars.iter().map(|(h, c)| json!({"h": h.to_string(), "char": c.to_json()})).collect::<Vec<_>>(),
        })
    }
}

/// `max_{r,s} h_{r,s;0}`, the base of the solver window.
pub fn top_lowest_weight(model: &ModelParams) -> Rational {
    (1..=model.pp)
        .flat_map(|r| (1..=model.pm).map(move |s| (r, s)))
        .map(|(r, s)| model.h_label(r, s, 0))
        .max()
        .expect("nonempty grid")
}

/// Solver cutoff whose window covers every `K±`/`X±` check to order `cutoff`.
pub fn kx_solver_cutoff(model: &ModelParams, cutoff: usize) -> Result<usize> {
    let mut lowest = top_lowest_weight(model);
    for r in 1..=model.pp {
        for s in 1..=model.pm {
            for sign in [Sign::Plus, Sign::Minus] {
                lowest = lowest.max(extended_weight(model, sign, r, s, 0)?.delta);
            }
        }
    }
    Ok(integer_floor(&(lowest - top_lowest_weight(model))).max(0) as usize + 1 + cutoff)
}

pub fn solve_simple_characters(model: &ModelParams, cutoff: usize) -> Result<SimpleCharacters> {
    solve_simple_characters_ordered(model, cutoff, false)
}

/// The triangular solve, with ties among equal weights processed in either order.
pub fn solve_simple_characters_ordered(
    model: &ModelParams,
    cutoff: usize,
    reverse_ties: bool,
) -> Result<SimpleCharacters> {
    let window = top_lowest_weight(model) + rat(cutoff as i64, 1);
    let mut labels = labels_below(model, &window);
    labels.sort_by(|a, b| {
        b.0.cmp(&a.0).then(if reverse_ties {
            b.1.cmp(&a.1)
        } else {
            a.1.cmp(&b.1)
        })
    });
    let pn =
        partition_counts(integer_floor(&(&window - &labels.last().expect("labels").0)) as usize);
    let mut chars: BTreeMap<Rational, CharSeries> = BTreeMap::new();
    for (h, (r, s, n)) in &labels {
        let case = socle_case(model, *r, *s)?;
        let data = socle_to_bound(model, *r, *s, *n, case, &window);
        let own = data.all().filter(|c| *c == h).count();
        if own != 1 || data.all().any(|c| c < h) {
            return Err(Error::TriangularityViolated(format!(
                "F({r},{s};{n}) at weight {h}"
            )));
        }
        let len = integer_floor(&(&window - h)) as usize;
        let mut ch: Vec<i64> = pn[..=len].iter().map(|&x| x as i64).collect();
        for c in data.all().filter(|c| *c != h) {
            let d = integer_gap(c, h).ok_or_else(|| {
                Error::InconsistentTable(format!(
                    "constituent {c} of F({r},{s};{n}) off the integer lattice"
                ))
            })? as usize;
            let known = chars.get(c).ok_or_else(|| {
                Error::TriangularityViolated(format!("constituent {c} of F({r},{s};{n}) unsolved"))
            })?;
            for k in 0..=(len - d) {
                ch[k + d] -= known.coeffs[k];
            }
        }
        if ch.iter().any(|&x| x < 0) {
            return Err(Error::NegativeCoefficient(format!(
                "ch L({h}) from F({r},{s};{n})"
            )));
        }
        let series = CharSeries::new(h.clone(), ch);
        match chars.get(h) {
            Some(prev) if *prev != series => {
                return Err(Error::CharacterMismatch(format!(
                    "ch L({h}) from F({r},{s};{n}) disagrees"
                )));
            }
            Some(_) => {}
            None => {
                chars.insert(h.clone(), series);
            }
        }
    }
    Ok(SimpleCharacters {
        window,
        chars,
        labels,
    })
}

fn integer_floor(q: &Rational) -> i64 {
    q.floor().to_integer().to_i64().expect("small")
}

/// Re-checks `ch F_{r,s;n} = Σ ch L(constituents)` to order `cutoff`.
pub fn verify_socle_sum(
    model: &ModelParams,
    chars: &SimpleCharacters,
    r: i64,
    s: i64,
    n: i64,
    cutoff: usize,
) -> Result<Certificate> {
    let data = socle_constituents(model, r, s, n, cutoff)?;
    let f = fock_character(model, r, s, n, cutoff);
    let sum = chars.combination(data.all().map(|h| (h, 1)), &f.offset, &f.top())?;
    Ok(Certificate::new(
        format!("socle sum F({r},{s};{n})"),
        sum == f,
        f.to_json(),
        sum.to_json(),
    ))
}

/// Alternating sum over the Felder complex of `S₊` (through `F_{r,s;0}`) or of `S₋`.
pub fn felder_euler(
    model: &ModelParams,
    sign: Sign,
    r: i64,
    s: i64,
    cutoff: usize,
) -> Result<CharSeries> {
    let (pp, pm) = (model.pp, model.pm);
    let ok = match sign {
        Sign::Plus => (1..pp).contains(&r) && (1..=pm).contains(&s),
        Sign::Minus => (1..=pp).contains(&r) && (1..pm).contains(&s),
    };
    if !ok {
        return Err(Error::OutOfRange(format!("Felder complex for ({r},{s})")));
    }
    let term = |i: i64| -> (i64, i64, i64) {
        match (sign, i.rem_euclid(2)) {
            (Sign::Plus, 0) => (r, s, i),
            (Sign::Plus, _) => (pp - r, s, i),
            (Sign::Minus, 0) => (r, s, -i),
            (Sign::Minus, _) => (r, pm - s, -i),
        }
    };
    let offset = model.h_label(r, s, 0);
    let top = &offset + rat(cutoff as i64, 1);
    let weight = |i: i64| {
        let (a, b, n) = term(i);
        model.h_label(a, b, n)
    };
    // Lowest weights increase in |i| once past the first step; the window edge is checked, not assumed.
    let mut lo = 0;
    while weight(lo - 1) <= top || weight(lo - 2) <= top {
        lo -= 1;
    }
    let mut hi = 0;
    while weight(hi + 1) <= top || weight(hi + 2) <= top {
        hi += 1;
    }
    for edge in [lo - 1, lo - 2, hi + 1, hi + 2] {
        assert!(
            weight(edge) > top,
            "Felder window edge {edge} inside the cutoff"
        );
    }
    let mut acc = CharSeries::zero(offset.clone(), cutoff);
    for i in lo..=hi {
        let (a, b, n) = term(i);
        let h = model.h_label(a, b, n);
        if h > top {
            continue;
        }
        let f = fock_character(model, a, b, n, cutoff).realign(&offset, &top)?;
        let sgn = if i.is_even() { 1 } else { -1 };
        for (x, y) in acc.coeffs.iter_mut().zip(&f.coeffs) {
            *x += sgn * y;
        }
    }
    Ok(acc)
}

/// Both routes to `ch X±_{r,s}` and, where defined, `ch K±_{r,s}`.
#[derive(Debug, Clone, PartialEq)]
pub struct KxReport {
    pub sign: Sign,
    pub rs: (i64, i64),
    /// `Σ_n dim V±_{r,s;n} · ch L(Δ±_{r,s;n})`.
    pub x_soliton: CharSeries,
    /// Socles of the Fock family of the given parity.
    pub x_socle: CharSeries,
    /// Kernel intersections of both screenings over the same family.
    pub k: CharSeries,
    /// `ch K − ch X`, expected `ch L(h_{r,s;0})` for `+` in case I and `0` otherwise.
    pub quotient: CharSeries,
    pub expected_quotient: CharSeries,
}

impl KxReport {
    pub fn certificate(&self) -> Certificate {
        let pass = self.x_soliton == self.x_socle && self.quotient == self.expected_quotient;
        Certificate::new(
            format!("K/X{} ({},{})", self.sign, self.rs.0, self.rs.1),
            pass,
            json!({"x": self.x_soliton.to_json(), "k_minus_x": self.quotient.to_json()}),
            json!({"x": self.x_socle.to_json(), "k_minus_x": self.expected_quotient.to_json()}),
        )
    }
}

/// Kernel socles `K_{r,s;n;+}` and `K_{r,s;n;−}` in case I.
fn kernel_lists(
    model: &ModelParams,
    r: i64,
    s: i64,
    n: i64,
    bound: &Rational,
) -> (Vec<Rational>, Vec<Rational>) {
    let (pp, pm) = (model.pp, model.pm);
    let an = n.abs();
    let mut plus = ladder(model, r, pm - s, an - 1, 1, bound);
    let mut minus = plus.clone();
    if n >= 0 {
        plus.extend(ladder(model, r, s, n - 2, 1, bound));
    } else {
        plus.extend(ladder(model, r, s, -n, 1, bound));
    }
    if n >= 1 {
        minus.extend(ladder(model, pp - r, pm - s, n, 1, bound));
    } else {
        minus.extend(ladder(model, pp - r, pm - s, -n - 2, 1, bound));
    }
    (plus, minus)
}

fn multiset_intersection(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let mut count: BTreeMap<&Rational, i64> = BTreeMap::new();
    for x in b {
        *count.entry(x).or_default() += 1;
    }
    a.iter()
        .filter(|x| {
            let c = count.entry(x).or_default();
            *c -= 1;
            *c >= 0
        })
        .cloned()
        .collect()
}

pub fn kx_characters(
    model: &ModelParams,
    chars: &SimpleCharacters,
    r: i64,
    s: i64,
    sign: Sign,
    cutoff: usize,
) -> Result<KxReport> {
    let case = socle_case(model, r, s)?;
    let delta0 = extended_weight(model, sign, r, s, 0)?.delta;
    let h0 = model.h_label(r, s, 0);
    let with_top = sign == Sign::Plus && case == SocleCase::I;
    let offset = if with_top {
        delta0.clone().min(h0.clone())
    } else {
        delta0.clone()
    };
    let top = &offset + rat(cutoff as i64, 1);
    let parity = match sign {
        Sign::Plus => 0,
        Sign::Minus => 1,
    };

    let mut soliton: BTreeMap<Rational, i64> = BTreeMap::new();
    for n in 0.. {
        let d = extended_weight(model, sign, r, s, n)?.delta;
        if d > top {
            break;
        }
        *soliton.entry(d).or_default() += 2 * n + 1 + parity;
    }

    let mut socle: BTreeMap<Rational, i64> = BTreeMap::new();
    let mut kernel: BTreeMap<Rational, i64> = BTreeMap::new();
    for dir in [1, -1] {
        let mut m = if dir == 1 { parity } else { parity - 2 };
        loop {
            let data = socle_to_bound(model, r, s, m, case, &top);
            let s1 = data.components[0].clone();
            let k = if case == SocleCase::I {
                let (plus, minus) = kernel_lists(model, r, s, m, &top);
                multiset_intersection(&plus, &minus)
            } else {
                s1.clone()
            };
            if s1.is_empty() && k.is_empty() && m.abs() >= 2 {
                break;
            }
            for h in s1 {
                *socle.entry(h).or_default() += 1;
            }
            for h in k {
                *kernel.entry(h).or_default() += 1;
            }
            m += 2 * dir;
        }
    }

    let build = |w: &BTreeMap<Rational, i64>| {
        chars.combination(w.iter().map(|(h, m)| (h, *m)), &offset, &top)
    };
    let x_soliton = build(&soliton)?;
    let x_socle = build(&socle)?;
    let k = build(&kernel)?;
    let quotient = k.sub(&x_soliton)?;
    let expected_quotient = if with_top {
        chars.combination([(&h0, 1)], &offset, &top)?
    } else {
        CharSeries::zero(offset.clone(), cutoff)
    };
    let report = KxReport {
        sign,
        rs: (r, s),
        x_soliton,
        x_socle,
        k,
        quotient,
        expected_quotient,
    };
    if !report.certificate().pass {
        return Err(Error::CharacterMismatch(format!(
            "{}",
            report.certificate()
        )));
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(a: i64, b: i64) -> ModelParams {
        ModelParams::new(a, b).unwrap()
    }

    #[test]
    fn fock_characters() {
        let md = m(2, 3);
        let f = fock_character(&md, 1, 1, 0, 6);
        assert_eq!(f.coeffs, vec![1, 1, 2, 3, 5, 7, 11]);
        assert_eq!(f.offset, rat(0, 1));
        assert_eq!(fock_character(&md, 1, 1, -1, 3).offset, rat(2, 1));
    }

    #[test]
    fn series_alignment() {
        let a = CharSeries::new(rat(0, 1), vec![1, 1, 1, 1]);
        let b = CharSeries::new(rat(1, 1), vec![1, 1, 1, 1]);
        let s = a.add(&b).unwrap();
        assert_eq!(s, CharSeries::new(rat(0, 1), vec![1, 2, 2, 2]));
        let c = CharSeries::new(rat(1, 2), vec![1]);
        assert!(a.add(&c).is_err());
        assert_eq!(a.sub(&a).unwrap().coeffs, vec![0; 4]);
    }

    #[test]
    fn socle_cases() {
        let md = m(2, 3);
        let d = socle_constituents(&md, 2, 3, 1, 20).unwrap();
        assert_eq!(d.case, SocleCase::III);
        assert_eq!(d.components.len(), 1);
        assert_eq!(d.components[0][0], md.h_label(2, 3, 1));
        let d = socle_constituents(&md, 1, 1, 0, 20).unwrap();
        assert_eq!(d.case, SocleCase::I);
        assert_eq!(d.components.len(), 3);
        assert_eq!(d.components[1][0], rat(0, 1));
        let d = socle_constituents(&md, 2, 1, 1, 20).unwrap();
        assert_eq!(d.case, SocleCase::IIPlus);
        assert_eq!(d.components.len(), 2);
    }

    #[test]
    fn trivial_character() {
        let chars = solve_simple_characters(&m(2, 3), 20).unwrap();
        let c = chars.get(&rat(0, 1)).unwrap();
        assert_eq!(c.coeffs[0], 1);
        assert!(c.coeffs[1..].iter().all(|&x| x == 0));
        assert!(chars
            .chars
            .values()
            .all(|c| c.coeffs[0] == 1 && c.is_nonnegative()));
    }

    #[test]
    fn felder_examples() {
        let md = m(2, 3);
        let f = felder_euler(&md, Sign::Plus, 1, 1, 20).unwrap();
        assert_eq!(f.coeffs[0], 1);
        assert!(f.coeffs[1..].iter().all(|&x| x == 0));
        let f = felder_euler(&md, Sign::Plus, 1, 3, 20).unwrap();
        assert!(f.coeffs.iter().all(|&x| x == 0));
        assert!(felder_euler(&md, Sign::Plus, 2, 1, 20).is_err());
    }

    #[test]
    fn kx_examples() {
        let md = m(2, 3);
        let chars = solve_simple_characters(&md, kx_solver_cutoff(&md, 20).unwrap()).unwrap();
        let rep = kx_characters(&md, &chars, 1, 1, Sign::Plus, 20).unwrap();
        let q = rep
            .quotient
            .realign(&rat(0, 1), &rep.quotient.top())
            .unwrap();
        assert_eq!(q.coeffs[0], 1);
        assert!(q.coeffs[1..].iter().all(|&x| x == 0));
        for sign in [Sign::Plus, Sign::Minus] {
            let rep = kx_characters(&md, &chars, 2, 3, sign, 20).unwrap();
            assert_eq!(rep.k, rep.x_soliton);
        }
        let rep = kx_characters(&md, &chars, 1, 1, Sign::Minus, 20).unwrap();
        let d0 = extended_weight(&md, Sign::Minus, 1, 1, 0).unwrap().delta;
        let lead = integer_gap(&d0, &rep.x_soliton.offset).unwrap() as usize;
        assert_eq!(rep.x_soliton.coeffs[lead], 2);
    }
}
