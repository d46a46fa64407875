//! Screening images as Jack transports, extended weights `Δ±_{r,s;n}`,
//! soliton sectors with their Frobenius action, and the structure constants
//! `a_{n,k}`, `b_{n,k}`.

use std::fmt;

use serde_json::{json, Value};

use crate::certificate::Certificate;
use crate::error::{Error, Result};
use crate::fock::{rho_gamma, singular_space, virasoro_apply, FockElement, ModelParams};
use crate::jack::{b_lambda, eval_p, eval_q, jack_p_recursive};
use crate::partitions::{special_partition, Partition, SpecialKind};
use crate::scalars::{rat, QuadScalar, Rational, Scalar};

pub const SINGULAR_RS_GUARD: i64 = 12;
pub const PROPORTIONALITY_RS_GUARD: i64 = 10;
pub const STRUCT_CONST_SIZE_GUARD: usize = 24;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn symbol(self) -> &'static str {
        match self {
            Sign::Plus => "+",
            Sign::Minus => "-",
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "+" | "plus" => Ok(Sign::Plus),
            "-" | "minus" => Ok(Sign::Minus),
            _ => Err(Error::Parse(format!("sign {s:?}"))),
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.symbol())
    }
}

fn jack_q_rational(
    lambda: &Partition,
    kappa: &Rational,
) -> Result<crate::symfun::SymPoly<Rational>> {
    let p = jack_p_recursive(lambda, kappa)?;
    Ok(p.scale(&b_lambda(lambda, kappa)?))
}

/// `S₊^{[r]}|β_{r,−s}⟩ = ρ_{2/α₊}(Q_{(s)^r}(κ₋))|β_{−r,−s}⟩`, and the `S₋` analogue.
pub fn singular_vector(model: &ModelParams, sign: Sign, r: i64, s: i64) -> Result<FockElement> {
    if r < 1 || s < 1 {
        return Err(Error::OutOfRange(format!(
            "(r,s) = ({r},{s}) must be positive"
        )));
    }
    if r * s > SINGULAR_RS_GUARD {
        return Err(Error::SizeGuardExceeded(format!(
            "rs = {} > {SINGULAR_RS_GUARD}",
            r * s
        )));
    }
    let (lambda, kappa, alpha) = match sign {
        Sign::Plus => (
            Partition::rect(s as usize, r as usize),
            &model.kappa_minus,
            &model.alpha_plus,
        ),
        Sign::Minus => (
            Partition::rect(r as usize, s as usize),
            &model.kappa_plus,
            &model.alpha_minus,
        ),
    };
    let q = jack_q_rational(&lambda, kappa)?.map_coeffs(QuadScalar::from_rational);
    let gamma = QuadScalar::from_int(2).div(alpha)?;
    Ok(rho_gamma(&q, &gamma, model.weight(-r, -s, 0)))
}

/// Checks that `singular_vector` is killed by `L₁…L₅`, has `L₀`-eigenvalue `h_{−r,s}`, and spans the brute-force singular space.
pub fn singular_certificate(
    model: &ModelParams,
    sign: Sign,
    r: i64,
    s: i64,
) -> Result<Certificate> {
    let v = singular_vector(model, sign, r, s)?;
    let killed = (1..=5).all(|n| virasoro_apply(model, &v, n).is_zero());
    let h = QuadScalar::from_rational(&model.h_rs(-r, s));
    let eigen = virasoro_apply(model, &v, 0) == v.scale(&h);
    let space = singular_space(model, &model.weight(-r, -s, 0), (r * s) as usize)?;
    let spans = space.len() == 1 && v.ratio_to(&space[0]).is_some_and(|c| !c.is_zero());
    Ok(Certificate::new(
        format!(
            "singular vector ({},{}) {sign} r={r} s={s}",
            model.pp, model.pm
        ),
        killed && eigen && spans && !v.is_zero(),
        json!({"annihilated": killed, "l0_eigen": eigen, "space_dim": space.len(), "spans": spans}),
        json!({"annihilated": true, "l0_eigen": true, "space_dim": 1, "spans": true}),
    ))
}

/// Checks `S₊`-image `= (−1)^{rs} b_{(s)^r}(κ₋) · S₋`-image and returns the ratio.
pub fn proportionality(model: &ModelParams, r: i64, s: i64) -> Result<Certificate> {
    if r * s > PROPORTIONALITY_RS_GUARD {
        return Err(Error::SizeGuardExceeded(format!(
            "rs = {} > {PROPORTIONALITY_RS_GUARD}",
            r * s
        )));
    }
    let plus = singular_vector(model, Sign::Plus, r, s)?;
    let minus = singular_vector(model, Sign::Minus, r, s)?;
    let ratio = plus
        .ratio_to(&minus)
        .ok_or_else(|| Error::NotProportional(format!("{plus} vs {minus}")))?;
    let sign = if (r * s) % 2 == 0 {
        rat(1, 1)
    } else {
        rat(-1, 1)
    };
    let expected = QuadScalar::from_rational(
        &(sign * b_lambda(&Partition::rect(s as usize, r as usize), &model.kappa_minus)?),
    );
    Ok(Certificate::new(
        format!("proportionality ({},{}) r={r} s={s}", model.pp, model.pm),
        ratio == expected,
        ratio.to_json(),
        expected.to_json(),
    )
    .with_ratio(ratio.to_json()))
}

/// Which branch of the `Δ±` definition applies.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Branch {
    /// `r = p₊`, `s = p₋`
    Corner,
    /// `r < p₊`, `s = p₋`
    TopEdge,
    /// `r = p₊`, `s < p₋`
    SideEdge,
    /// `r < p₊`, `s < p₋`
    Interior,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ExtendedWeight {
    pub delta: Rational,
    pub branch: Branch,
}

/// `Δ±_{r,s;n}`, the lowest conformal weight of the soliton sector `V±_{r,s;n}`.
pub fn extended_weight(
    model: &ModelParams,
    sign: Sign,
    r: i64,
    s: i64,
    n: i64,
) -> Result<ExtendedWeight> {
    let (pp, pm) = (model.pp, model.pm);
    if !(1..=pp).contains(&r) || !(1..=pm).contains(&s) || n < 0 {
        return Err(Error::OutOfRange(format!("(r,s;n) = ({r},{s};{n})")));
    }
    let shift = match sign {
        Sign::Plus => 0,
        Sign::Minus => 1,
    };
    let (branch, delta) = match (r == pp, s == pm) {
        (true, true) => (Branch::Corner, model.h_label(pp, pm, -2 * n - shift)),
        (false, true) => (
            Branch::TopEdge,
            model.h_label(pp - r, pm, -2 * n - 1 - shift),
        ),
        (true, false) => (
            Branch::SideEdge,
            model.h_label(pp, pm - s, 2 * n + 1 + shift),
        ),
        (false, false) => (
            Branch::Interior,
            model.h_label(pp - r, s, -2 * n - 1 - shift),
        ),
    };
    Ok(ExtendedWeight { delta, branch })
}

/// `Δ_n = ((n+1)p₊−1)((n+1)p₋−1)`.
pub fn delta_n(model: &ModelParams, n: i64) -> i64 {
    ((n + 1) * model.pp - 1) * ((n + 1) * model.pm - 1)
}

/// Basis vector `W_{n,m}` of the soliton sector `V±_{r,s;n}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SolitonLabel {
    pub sign: Sign,
    pub r: i64,
    pub s: i64,
    pub n: i64,
    pub m: i64,
}

impl SolitonLabel {
    pub fn new(model: &ModelParams, sign: Sign, r: i64, s: i64, n: i64, m: i64) -> Result<Self> {
        let w = SolitonLabel { sign, r, s, n, m };
        w.validate(model)?;
        Ok(w)
    }

    pub fn m_range(&self) -> (i64, i64) {
        match self.sign {
            Sign::Plus => (-self.n, self.n),
            Sign::Minus => (-self.n, self.n + 1),
        }
    }

    fn validate(&self, model: &ModelParams) -> Result<()> {
        if !(1..=model.pp).contains(&self.r) || !(1..=model.pm).contains(&self.s) || self.n < 0 {
            return Err(Error::OutOfRange(format!("{self}")));
        }
        let (lo, hi) = self.m_range();
        if !(lo..=hi).contains(&self.m) {
            return Err(Error::OutOfSector(format!("{self}")));
        }
        Ok(())
    }

    fn with_m(&self, m: i64) -> Self {
        SolitonLabel { m, ..*self }
    }

    pub fn to_json(&self) -> Value {
        json!({"sign": self.sign.symbol(), "r": self.r, "s": self.s, "n": self.n, "m": self.m})
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let int = |k: &str| {
            v.get(k)
                .and_then(Value::as_i64)
                .ok_or_else(|| Error::Parse(format!("soliton label field {k}")))
        };
        let sign = v
            .get("sign")
            .and_then(Value::as_str)
            .ok_or_else(|| Error::Parse("soliton label sign".into()))?;
        Ok(SolitonLabel {
            sign: Sign::parse(sign)?,
            r: int("r")?,
            s: int("s")?,
            n: int("n")?,
            m: int("m")?,
        })
    }
}

impl fmt::Display for SolitonLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "W{}[{},{};{}]_{}",
            self.sign, self.r, self.s, self.n, self.m
        )
    }
}

/// All `2n+1` (sign +) or `2n+2` (sign −) basis labels of `V±_{r,s;n}`.
pub fn sector_labels(
    model: &ModelParams,
    sign: Sign,
    r: i64,
    s: i64,
    n: i64,
) -> Result<Vec<SolitonLabel>> {
    let first = SolitonLabel::new(model, sign, r, s, n, -n)?;
    let (lo, hi) = first.m_range();
    Ok((lo..=hi).map(|m| first.with_m(m)).collect())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Frobenius {
    E,
    F,
    H,
}

impl Frobenius {
    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "E" | "e" => Ok(Frobenius::E),
            "F" | "f" => Ok(Frobenius::F),
            "H" | "h" => Ok(Frobenius::H),
            _ => Err(Error::Parse(format!("Frobenius generator {s:?}"))),
        }
    }
}

/// A finite formal combination of soliton basis vectors.
pub type SolitonCombination = Vec<(SolitonLabel, Rational)>;

fn add_to(out: &mut SolitonCombination, w: SolitonLabel, c: Rational) {
    if let Some(slot) = out.iter_mut().find(|(l, _)| *l == w) {
        slot.1 += c;
    } else {
        out.push((w, c));
    }
    out.retain(|(_, c)| *c != rat(0, 1));
}

fn lambda_plus_b(model: &ModelParams, n: i64, m: i64) -> Result<Rational> {
    let l = special_partition(SpecialKind::LambdaPlus { n, m }, model.pp, model.pm)?;
    b_lambda(&l, &model.kappa_minus)
}

fn is_normalized_chain(w: &SolitonLabel) -> bool {
    w.sign == Sign::Plus && w.r == 1 && w.s == 1
}

fn apply_e(model: &ModelParams, w: &SolitonLabel) -> Result<SolitonCombination> {
    w.validate(model)?;
    let (_, hi) = w.m_range();
    Ok(if w.m == hi {
        vec![]
    } else {
        vec![(w.with_m(w.m + 1), rat(1, 1))]
    })
}

fn apply_f(model: &ModelParams, w: &SolitonLabel) -> Result<SolitonCombination> {
    w.validate(model)?;
    let (lo, _) = w.m_range();
    if w.m == lo {
        return Ok(vec![]);
    }
    let c = if is_normalized_chain(w) {
        -(lambda_plus_b(model, w.n, w.m)? / lambda_plus_b(model, w.n, w.m - 1)?)
    } else {
        rat(1, 1)
    };
    Ok(vec![(w.with_m(w.m - 1), c)])
}

fn compose(
    model: &ModelParams,
    outer: fn(&ModelParams, &SolitonLabel) -> Result<SolitonCombination>,
    inner: fn(&ModelParams, &SolitonLabel) -> Result<SolitonCombination>,
    w: &SolitonLabel,
) -> Result<SolitonCombination> {
    let mut out = Vec::new();
    for (u, c) in inner(model, w)? {
        for (v, d) in outer(model, &u)? {
            add_to(&mut out, v, &c * &d);
        }
    }
    Ok(out)
}

/// `E`, `F`, `H = EF − FE` on a soliton basis vector.
pub fn frobenius_apply(
    model: &ModelParams,
    x: Frobenius,
    w: &SolitonLabel,
) -> Result<SolitonCombination> {
    match x {
        Frobenius::E => apply_e(model, w),
        Frobenius::F => apply_f(model, w),
        Frobenius::H => {
            let mut out = compose(model, apply_e, apply_f, w)?;
            for (v, c) in compose(model, apply_f, apply_e, w)? {
                add_to(&mut out, v, -c);
            }
            Ok(out)
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StructKind {
    A,
    B,
}

/// A structure constant with its independent second evaluation when in range.
#[derive(Debug, Clone, PartialEq)]
pub struct StructConst {
    pub kind: StructKind,
    pub n: i64,
    pub k: i64,
    pub partition: Partition,
    pub value: Rational,
    /// `None` when the partition exceeds the size guard.
    pub second_route: Option<Rational>,
}

impl StructConst {
    pub fn certificate(&self) -> Certificate {
        let name = format!(
            "{}_{{{},{}}}",
            if self.kind == StructKind::A { "a" } else { "b" },
            self.n,
            self.k
        );
        let rhs = self
            .second_route
            .as_ref()
            .map_or(Value::Null, |v| json!(v.to_string()));
        let pass = self.second_route.as_ref().is_some_and(|v| *v == self.value);
        Certificate::new(name, pass, json!(self.value.to_string()), rhs)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "kind": if self.kind == StructKind::A { "a" } else { "b" },
            "n": self.n,
            "k": self.k,
            "partition": self.partition.to_json(),
            "value": self.value.to_string(),
            "second_route": self.second_route.as_ref().map(|v| v.to_string()),
        })
    }
}

fn degenerate(e: Error) -> Error {
    match e {
        Error::EmptyPartition => Error::OutOfRange("degenerate partition label".into()),
        e => e,
    }
}

/// `a_{n,k}` and `b_{n,k}` via the closed box products, cross-checked by `ε_X` of an explicit Jack polynomial.
pub fn struct_const(model: &ModelParams, kind: StructKind, n: i64, k: i64) -> Result<StructConst> {
    if n < 0 || k < -1 {
        return Err(Error::OutOfRange(format!("(n,k) = ({n},{k})")));
    }
    let (pp, pm) = (model.pp, model.pm);
    match kind {
        StructKind::A => {
            let lambda = special_partition(SpecialKind::LambdaPlus { n: n + k, m: 1 - n }, pp, pm)
                .map_err(degenerate)?;
            let x = rat(2 * (2 * pp - 1), 1);
            let value = eval_q(&lambda, &x, &model.kappa_minus)?;
            let second_route = if lambda.size() <= STRUCT_CONST_SIZE_GUARD {
                Some(jack_q_rational(&lambda, &model.kappa_minus)?.eval_eps(&x))
            } else {
                None
            };
            Ok(StructConst {
                kind,
                n,
                k,
                partition: lambda,
                value,
                second_route,
            })
        }
        StructKind::B => {
            let lambda = special_partition(SpecialKind::LambdaMinus { n: n + k, m: n - 1 }, pp, pm)
                .map_err(degenerate)?;
            let x = rat(2 * (2 * pm - 1), 1);
            let sign = if (k + 1) % 2 == 0 {
                rat(1, 1)
            } else {
                rat(-1, 1)
            };
            let prefactor = sign * lambda_plus_b(model, 1, 1).map_err(degenerate)?
                / lambda_plus_b(model, n, n).map_err(degenerate)?;
            let value = &prefactor * eval_p(&lambda, &x, &model.kappa_plus)?;
            let second_route = if lambda.size() <= STRUCT_CONST_SIZE_GUARD {
                Some(&prefactor * jack_p_recursive(&lambda, &model.kappa_plus)?.eval_eps(&x))
            } else {
                None
            };
            Ok(StructConst {
                kind,
                n,
                k,
                partition: lambda,
                value,
                second_route,
            })
        }
    }
}
