//! Kac table, zero-mode polynomials `ω_n`, the relations `g₀, g₁, g₂`, the
//! zero-mode algebra product table and its simple modules.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde_json::{json, Value};

use crate::certificate::Certificate;
use crate::error::{Error, Result};
use crate::fock::ModelParams;
use crate::jack::{b_lambda, jack_p_recursive};
use crate::partitions::{special_partition, SpecialKind};
use crate::scalars::{rat, Poly, QuadScalar, Rational, Scalar};
use crate::screening::{extended_weight, Sign, STRUCT_CONST_SIZE_GUARD};

pub type BetaPoly = Poly<QuadScalar>;
pub type HPoly = Poly<Rational>;

pub const OMEGA_N_GUARD: i64 = 2;

#[derive(Debug, Clone, PartialEq)]
pub struct KacClass {
    pub rs: (i64, i64),
    pub partner: (i64, i64),
    pub delta: Rational,
}

#[derive(Debug, Clone, PartialEq)]
pub struct KacTable {
    pub classes: Vec<KacClass>,
}

impl KacTable {
    pub fn to_json(&self) -> Value {
        json!({
            "classes": self.classes.iter().map(|c| json!({"rs": [c.rs.0, c.rs.1], "delta": c.delta.to_string()})).collect::<Vec<_>>()
        })
    }
}

/// Classes of `(r,s) ∼ (p₊−r, p₋−s)` with `Δ_{r,s} = h_{r,s;0}`.
pub fn kac_table(model: &ModelParams) -> KacTable {
    let mut seen = BTreeSet::new();
    let mut classes = Vec::new();
    for r in 1..model.pp {
        for s in 1..model.pm {
            if seen.contains(&(r, s)) {
                continue;
            }
            let partner = (model.pp - r, model.pm - s);
            seen.insert((r, s));
            seen.insert(partner);
            classes.push(KacClass {
                rs: (r, s),
                partner,
                delta: model.h_rs(r, s),
            });
        }
    }
    KacTable { classes }
}

/// `ω_n` by both routes, when the second is in range.
#[derive(Debug, Clone, PartialEq)]
pub struct OmegaPoly {
    pub n: i64,
    pub poly: BetaPoly,
    pub second_route: Option<BetaPoly>,
}

impl OmegaPoly {
    pub fn certificate(&self) -> Certificate {
        let rhs = self
            .second_route
            .as_ref()
            .map_or(Value::Null, |p| p.to_json("beta"));
        let pass = self.second_route.as_ref() == Some(&self.poly);
        Certificate::new(
            format!("omega_{} two routes", self.n),
            pass,
            self.poly.to_json("beta"),
            rhs,
        )
    }
}

/// `ω_n(β) = ∏_{i<(n+1)p₊} ∏_{j<(n+1)p₋} (β − β_{i,j}) / β_{(n+1)p₊−i, 1+j−(n+1)p₋}`.
pub fn omega_poly(model: &ModelParams, n: i64) -> Result<OmegaPoly> {
    if !(0..=OMEGA_N_GUARD).contains(&n) {
        return Err(Error::DegreeGuardExceeded(format!(
            "omega_{n}: n must lie in 0..={OMEGA_N_GUARD}"
        )));
    }
    let (a, b) = ((n + 1) * model.pp, (n + 1) * model.pm);
    let mut roots = Vec::new();
    let mut denom = QuadScalar::one();
    for i in 1..a {
        for j in 1..b {
            roots.push(model.beta_rs(i, j));
            denom = denom * model.beta_rs(a - i, 1 + j - b);
        }
    }
    let poly = Poly::from_roots(&roots).scale(&denom.inv()?);
    let lambda = special_partition(SpecialKind::LambdaPlus { n, m: 0 }, model.pp, model.pm)?;
    let second_route = if lambda.size() <= STRUCT_CONST_SIZE_GUARD {
        let q = jack_p_recursive(&lambda, &model.kappa_minus)?
            .scale(&b_lambda(&lambda, &model.kappa_minus)?);
        let q = q.map_coeffs(QuadScalar::from_rational);
        Some(q.eval_eps_linear(&model.alpha_minus, &QuadScalar::zero()))
    } else {
        None
    };
    Ok(OmegaPoly {
        n,
        poly,
        second_route,
    })
}

/// Rewrites a `β ↦ α₀−β` symmetric polynomial in `h = ½β(β−α₀)`.
pub fn to_h_poly(model: &ModelParams, f: &BetaPoly) -> Result<HPoly> {
    let half_a0 = model.alpha0.scale(&rat(1, 2));
    let in_t = f.compose_linear(&QuadScalar::one(), &half_a0);
    if in_t
        .coeffs()
        .iter()
        .skip(1)
        .step_by(2)
        .any(|c| !c.is_zero())
    {
        return Err(Error::NotSymmetric);
    }
    // t² = 2h + α₀²/4
    let u = Poly::new(vec![half_a0.clone() * half_a0, QuadScalar::from_int(2)]);
    let mut acc = Poly::zero();
    for c in in_t.coeffs().iter().step_by(2).rev() {
        acc = &(&acc * &u) + &Poly::constant(c.clone());
    }
    let coeffs = acc
        .coeffs()
        .iter()
        .map(|c| {
            c.as_rational()
                .cloned()
                .ok_or_else(|| Error::OutOfRange(format!("irrational coefficient {c}")))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Poly::new(coeffs))
}

/// Exact root multiset certificate: divides out every expected root and requires a constant cofactor.
pub fn certify_roots(
    name: &str,
    g: &HPoly,
    expected: &BTreeMap<Rational, usize>,
) -> Result<Certificate> {
    let mut rest = g.clone();
    let mut missing = Vec::new();
    for (root, &mult) in expected {
        let lin = Poly::linear_root(root.clone());
        for taken in 0..mult {
            let (q, r) = rest.div_rem(&lin)?;
            if !r.is_zero() {
                missing.push(format!("{root} (needed {mult}, found {taken})"));
                break;
            }
            rest = q;
        }
    }
    let extra = rest.degree().unwrap_or(0);
    if !missing.is_empty() || extra > 0 || rest.is_zero() {
        return Err(Error::FactorizationMismatch(format!(
            "{name}: missing roots [{}], {extra} unexplained roots",
            missing.join(", ")
        )));
    }
    let pattern = json!(expected
        .iter()
        .map(|(r, m)| json!([r.to_string(), m]))
        .collect::<Vec<_>>());
    Ok(Certificate::new(name, true, g.to_json("h"), pattern)
        .with_ratio(json!(rest.coeff(0).to_string())))
}

/// Root multisets of `g₀, g₁, g₂` read off the Kac table and the `Δ±` grids.
pub fn g_patterns(model: &ModelParams) -> Result<[BTreeMap<Rational, usize>; 3]> {
    let (pp, pm) = (model.pp, model.pm);
    let kac = kac_table(model);
    let mut pats: [BTreeMap<Rational, usize>; 3] = Default::default();
    for c in &kac.classes {
        for (pat, mult) in pats.iter_mut().zip([1, 4, 3]) {
            *pat.entry(c.delta.clone()).or_default() += mult;
        }
    }
    for r in 1..=pp {
        for s in 1..=pm {
            let corner = r == pp && s == pm;
            let plus = extended_weight(model, Sign::Plus, r, s, 0)?.delta;
            let minus = extended_weight(model, Sign::Minus, r, s, 0)?.delta;
            let mult_plus = if corner { 1 } else { 2 };
            *pats[1].entry(plus.clone()).or_default() += mult_plus;
            *pats[2].entry(plus).or_default() += mult_plus;
            *pats[2].entry(minus).or_default() += 1;
        }
    }
    Ok(pats)
}

#[derive(Debug, Clone, PartialEq)]
pub struct GPolys {
    pub g: [HPoly; 3],
    pub omega0: OmegaPoly,
    pub certificates: Vec<Certificate>,
}

/// `g₀ = ω₀`, `g₁ = ω₁²`, `g₂ = ω₂` in the variable `h`, each certified against its root pattern.
pub fn g_polys(model: &ModelParams) -> Result<GPolys> {
    let omega0 = omega_poly(model, 0)?;
    let w1 = omega_poly(model, 1)?.poly;
    let w2 = omega_poly(model, 2)?.poly;
    let g = [
        to_h_poly(model, &omega0.poly)?,
        to_h_poly(model, &(&w1 * &w1))?,
        to_h_poly(model, &w2)?,
    ];
    let pats = g_patterns(model)?;
    let mut certificates = vec![omega0.certificate()];
    for (i, (gi, pat)) in g.iter().zip(&pats).enumerate() {
        certificates.push(certify_roots(
            &format!("g{i} roots ({},{})", model.pp, model.pm),
            gi,
            pat,
        )?);
    }
    Ok(GPolys {
        g,
        omega0,
        certificates,
    })
}

/// Coefficients in `Q[f, g]`, with `f = f([T])` formal and `g = g₁([T])`.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct FG(BTreeMap<(u32, u32), Rational>);

impl FG {
    pub fn zero() -> Self {
        FG::default()
    }

    pub fn monomial(c: i64, f: u32, g: u32) -> Self {
        let mut out = FG::zero();
        out.add_term((f, g), rat(c, 1));
        out
    }

    fn add_term(&mut self, k: (u32, u32), c: Rational) {
        let v = self.0.remove(&k).unwrap_or_else(|| rat(0, 1)) + c;
        if v != rat(0, 1) {
            self.0.insert(k, v);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn add(&self, o: &FG) -> FG {
        let mut out = self.clone();
        for (k, c) in &o.0 {
            out.add_term(*k, c.clone());
        }
        out
    }

    pub fn neg(&self) -> FG {
        FG(self.0.iter().map(|(k, c)| (*k, -c)).collect())
    }

    pub fn mul(&self, o: &FG) -> FG {
        let mut out = FG::zero();
        for ((a, b), c) in &self.0 {
            for ((x, y), d) in &o.0 {
                out.add_term((a + x, b + y), c * d);
            }
        }
        out
    }

    /// Reduction modulo `g − f²`.
    pub fn reduce(&self) -> FG {
        let mut out = FG::zero();
        for ((a, b), c) in &self.0 {
            out.add_term((a + 2 * b, 0), c.clone());
        }
        out
    }

    /// Evaluation at `f ↦ φ`, `g ↦ G` in `Q[φ]/(φ² − G)`.
    pub fn eval(&self, g_val: &Rational) -> Phi {
        let mut out = Phi::zero(g_val.clone());
        for ((a, b), c) in &self.0 {
            let term = Phi::generator(g_val.clone())
                .pow(*a)
                .scale(&(c * g_val.pow(*b as i32)));
            out = out.add(&term);
        }
        out
    }
}

impl fmt::Display for FG {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "0");
        }
        let terms: Vec<String> = self
            .0
            .iter()
            .map(|((a, b), c)| {
                let mut s = c.to_string();
                if *a > 0 {
                    s.push_str(&format!("·f^{a}"));
                }
                if *b > 0 {
                    s.push_str(&format!("·g1^{b}"));
                }
                s
            })
            .collect();
        write!(f, "{}", terms.join(" + "))
    }
}

/// An element `c + Σ_m d_m [W_{1,m}]` of the zero-mode algebra.
#[derive(Debug, Clone, PartialEq)]
pub struct ZhuElement {
    pub scalar: FG,
    /// Coefficients of `[W_{1,−1}], [W_{1,0}], [W_{1,1}]`.
    pub w: [FG; 3],
}

impl ZhuElement {
    pub fn zero() -> Self {
        ZhuElement {
            scalar: FG::zero(),
            w: Default::default(),
        }
    }

    pub fn scalar(c: FG) -> Self {
        ZhuElement {
            scalar: c,
            ..Self::zero()
        }
    }

    pub fn w(m: i64, c: FG) -> Self {
        let mut out = Self::zero();
        out.w[(m + 1) as usize] = c;
        out
    }

    pub fn add(&self, o: &Self) -> Self {
        ZhuElement {
            scalar: self.scalar.add(&o.scalar),
            w: std::array::from_fn(|i| self.w[i].add(&o.w[i])),
        }
    }

    pub fn neg(&self) -> Self {
        ZhuElement {
            scalar: self.scalar.neg(),
            w: std::array::from_fn(|i| self.w[i].neg()),
        }
    }

    pub fn scale(&self, c: &FG) -> Self {
        ZhuElement {
            scalar: self.scalar.mul(c),
            w: std::array::from_fn(|i| self.w[i].mul(c)),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.scalar.is_zero() && self.w.iter().all(FG::is_zero)
    }

    pub fn reduce(&self) -> Self {
        ZhuElement {
            scalar: self.scalar.reduce(),
            w: std::array::from_fn(|i| self.w[i].reduce()),
        }
    }
}

impl fmt::Display for ZhuElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        if !self.scalar.is_zero() {
            parts.push(format!("({})", self.scalar));
        }
        for (i, c) in self.w.iter().enumerate() {
            if !c.is_zero() {
                parts.push(format!("({c})·W{}", i as i64 - 1));
            }
        }
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}

/// The product table `[W_{1,a}]·[W_{1,b}]` and the three commutators.
#[derive(Debug, Clone, PartialEq)]
pub struct ZhuTable {
    pub products: [[ZhuElement; 3]; 3],
    pub commutators: Vec<((i64, i64), ZhuElement)>,
}

/// An associativity probe `(W_a W_b) W_c − W_a (W_b W_c)`.
#[derive(Debug, Clone, PartialEq)]
pub struct Probe {
    pub triple: (i64, i64, i64),
    pub defect: ZhuElement,
}

pub fn zhu_table() -> ZhuTable {
    let f = FG::monomial(1, 1, 0);
    let g1 = FG::monomial(1, 0, 1);
    let w = |m: i64, c: &FG| ZhuElement::w(m, c.clone());
    let minus_f = f.neg();
    let products = [
        [
            ZhuElement::zero(),
            w(-1, &minus_f),
            ZhuElement::scalar(g1.neg()).add(&w(0, &minus_f)),
        ],
        [w(-1, &f), ZhuElement::scalar(g1.clone()), w(1, &minus_f)],
        [
            ZhuElement::scalar(g1.neg()).add(&w(0, &f)),
            w(1, &f),
            ZhuElement::zero(),
        ],
    ];
    let two_f = FG::monomial(2, 1, 0);
    let commutators = vec![
        ((1, -1), w(0, &two_f)),
        ((0, 1), w(1, &two_f.neg())),
        ((0, -1), w(-1, &two_f)),
    ];
    ZhuTable {
        products,
        commutators,
    }
}

impl ZhuTable {
    pub fn product(&self, a: i64, b: i64) -> &ZhuElement {
        &self.products[(a + 1) as usize][(b + 1) as usize]
    }

    fn right_mul(&self, x: &ZhuElement, c: i64) -> ZhuElement {
        let mut out = ZhuElement::w(c, x.scalar.clone());
        for m in -1..=1 {
            out = out.add(&self.product(m, c).scale(&x.w[(m + 1) as usize]));
        }
        out
    }

    fn left_mul(&self, a: i64, x: &ZhuElement) -> ZhuElement {
        let mut out = ZhuElement::w(a, x.scalar.clone());
        for m in -1..=1 {
            out = out.add(&self.product(a, m).scale(&x.w[(m + 1) as usize]));
        }
        out
    }

    /// Each stored commutator equals the antisymmetrized table entries.
    pub fn commutators_consistent(&self) -> bool {
        self.commutators
            .iter()
            .all(|((a, b), c)| self.product(*a, *b).add(&self.product(*b, *a).neg()) == *c)
    }

    /// All 27 associativity defects; each must vanish modulo `g₁ = f²`.
    pub fn probes(&self) -> Result<Vec<Probe>> {
        let mut out = Vec::new();
        for a in -1..=1 {
            for b in -1..=1 {
                for c in -1..=1 {
                    let left = self.right_mul(self.product(a, b), c);
                    let right = self.left_mul(a, self.product(b, c));
                    let defect = left.add(&right.neg());
                    if !defect.reduce().is_zero() {
                        return Err(Error::InconsistentTable(format!("({a},{b},{c}): {defect}")));
                    }
                    out.push(Probe {
                        triple: (a, b, c),
                        defect,
                    });
                }
            }
        }
        Ok(out)
    }
}

/// `x + yφ` in `Q[φ]/(φ² − G)`.
#[derive(Debug, Clone, PartialEq)]
pub struct Phi {
    pub x: Rational,
    pub y: Rational,
    pub g: Rational,
}

impl Phi {
    pub fn zero(g: Rational) -> Self {
        Phi {
            x: rat(0, 1),
            y: rat(0, 1),
            g,
        }
    }

    pub fn constant(c: Rational, g: Rational) -> Self {
        Phi {
            x: c,
            y: rat(0, 1),
            g,
        }
    }

    pub fn generator(g: Rational) -> Self {
        Phi {
            x: rat(0, 1),
            y: rat(1, 1),
            g,
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        Phi {
            x: &self.x + &o.x,
            y: &self.y + &o.y,
            g: self.g.clone(),
        }
    }

    pub fn neg(&self) -> Self {
        Phi {
            x: -&self.x,
            y: -&self.y,
            g: self.g.clone(),
        }
    }

    pub fn mul(&self, o: &Self) -> Self {
        Phi {
            x: &self.x * &o.x + &self.y * &o.y * &self.g,
            y: &self.x * &o.y + &self.y * &o.x,
            g: self.g.clone(),
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Phi {
            x: &self.x * c,
            y: &self.y * c,
            g: self.g.clone(),
        }
    }

    pub fn pow(&self, n: u32) -> Self {
        (0..n).fold(Phi::constant(rat(1, 1), self.g.clone()), |acc, _| {
            acc.mul(self)
        })
    }

    pub fn is_zero(&self) -> bool {
        self.x == rat(0, 1) && self.y == rat(0, 1)
    }
}

type Mat = Vec<Vec<Phi>>;

fn mat_zero(d: usize, g: &Rational) -> Mat {
    vec![vec![Phi::zero(g.clone()); d]; d]
}

fn mat_mul(a: &Mat, b: &Mat) -> Mat {
    let d = a.len();
    let g = &a[0][0].g;
    let mut out = mat_zero(d, g);
    for i in 0..d {
        for j in 0..d {
            for k in 0..d {
                out[i][j] = out[i][j].add(&a[i][k].mul(&b[k][j]));
            }
        }
    }
    out
}

fn mat_add(a: &Mat, b: &Mat) -> Mat {
    a.iter()
        .zip(b)
        .map(|(r, s)| r.iter().zip(s).map(|(x, y)| x.add(y)).collect())
        .collect()
}

fn mat_scale(a: &Mat, c: &Phi) -> Mat {
    a.iter()
        .map(|r| r.iter().map(|x| c.mul(x)).collect())
        .collect()
}

fn mat_is_zero(a: &Mat) -> bool {
    a.iter().flatten().all(Phi::is_zero)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum SimpleKind {
    Minimal,
    Xplus,
    Xminus,
}

impl SimpleKind {
    pub fn name(self) -> &'static str {
        match self {
            SimpleKind::Minimal => "minimal",
            SimpleKind::Xplus => "Xplus",
            SimpleKind::Xminus => "Xminus",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SimpleModuleDescriptor {
    pub kind: SimpleKind,
    pub rs: (i64, i64),
    pub delta: Rational,
    pub dim: usize,
}

impl SimpleModuleDescriptor {
    pub fn to_json(&self) -> Value {
        json!({"kind": self.kind.name(), "rs": [self.rs.0, self.rs.1], "delta": self.delta.to_string(), "dim": self.dim})
    }
}

/// Minimal-model modules, then `X⁺_{r,s}` and `X⁻_{r,s}` for every `(r,s)` in the extended grid.
pub fn simple_census(model: &ModelParams) -> Result<Vec<SimpleModuleDescriptor>> {
    let mut out: Vec<SimpleModuleDescriptor> = kac_table(model)
        .classes
        .into_iter()
        .map(|c| SimpleModuleDescriptor {
            kind: SimpleKind::Minimal,
            rs: c.rs,
            delta: c.delta,
            dim: 1,
        })
        .collect();
    for (kind, sign, dim) in [
        (SimpleKind::Xplus, Sign::Plus, 1),
        (SimpleKind::Xminus, Sign::Minus, 2),
    ] {
        for r in 1..=model.pp {
            for s in 1..=model.pm {
                let delta = extended_weight(model, sign, r, s, 0)?.delta;
                out.push(SimpleModuleDescriptor {
                    kind,
                    rs: (r, s),
                    delta,
                    dim,
                });
            }
        }
    }
    Ok(out)
}

/// Builds the lowest-space representation of `d` and checks `g₂([T]) = 0` and every table entry.
pub fn rep_check(gp: &GPolys, d: &SimpleModuleDescriptor) -> Result<Certificate> {
    let big_g = gp.g[1].eval(&d.delta);
    let g2 = gp.g[2].eval(&d.delta);
    if g2 != rat(0, 1) {
        return Err(Error::RelationViolated(format!(
            "g2([T]) = {g2} at {}",
            d.delta
        )));
    }
    let dim = match d.kind {
        SimpleKind::Minimal | SimpleKind::Xplus => 1,
        SimpleKind::Xminus => 2,
    };
    let zero = Phi::zero(big_g.clone());
    let one = Phi::constant(rat(1, 1), big_g.clone());
    let phi = Phi::generator(big_g.clone());
    let ws: [Mat; 3] = if dim == 1 {
        std::array::from_fn(|_| mat_zero(1, &big_g))
    } else {
        // basis (v₊, v₋) with v₋ = [W_{1,−1}] v₊
        [
            vec![
                vec![zero.clone(), zero.clone()],
                vec![one.clone(), zero.clone()],
            ],
            vec![
                vec![phi.neg(), zero.clone()],
                vec![zero.clone(), phi.clone()],
            ],
            vec![
                vec![
                    zero.clone(),
                    Phi::constant(-&big_g * rat(2, 1), big_g.clone()),
                ],
                vec![zero.clone(), zero.clone()],
            ],
        ]
    };
    let ident: Mat = (0..dim)
        .map(|i| {
            (0..dim)
                .map(|j| if i == j { one.clone() } else { zero.clone() })
                .collect()
        })
        .collect();
    let realize = |e: &ZhuElement| -> Mat {
        let mut m = mat_scale(&ident, &e.scalar.eval(&big_g));
        for (i, c) in e.w.iter().enumerate() {
            m = mat_add(&m, &mat_scale(&ws[i], &c.eval(&big_g)));
        }
        m
    };
    let table = zhu_table();
    for a in -1..=1i64 {
        for b in -1..=1i64 {
            let lhs = mat_mul(&ws[(a + 1) as usize], &ws[(b + 1) as usize]);
            let rhs = realize(table.product(a, b));
            let diff = mat_add(&lhs, &mat_scale(&rhs, &one.neg()));
            if !mat_is_zero(&diff) {
                return Err(Error::RelationViolated(format!(
                    "[W1,{a}][W1,{b}] on {} at Δ = {}",
                    d.kind.name(),
                    d.delta
                )));
            }
        }
    }
    Ok(Certificate::new(
        format!(
            "rep {} ({},{}) Δ = {}",
            d.kind.name(),
            d.rs.0,
            d.rs.1,
            d.delta
        ),
        true,
        json!({"g1": big_g.to_string(), "g2": g2.to_string()}),
        json!({"dim": dim}),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(a: i64, b: i64) -> ModelParams {
        ModelParams::new(a, b).unwrap()
    }

    #[test]
    fn kac_examples() {
        let t = kac_table(&m(2, 3));
        assert_eq!(t.classes.len(), 1);
        assert_eq!(t.classes[0].delta, rat(0, 1));
        assert_eq!(t.classes[0].partner, (1, 2));
        let t = kac_table(&m(2, 5));
        assert_eq!(
            t.classes
                .iter()
                .map(|c| c.delta.clone())
                .collect::<Vec<_>>(),
            vec![rat(0, 1), rat(-1, 5)]
        );
        assert_eq!(
            t.to_json().to_string(),
            r#"{"classes":[{"rs":[1,1],"delta":"0"},{"rs":[1,2],"delta":"-1/5"}]}"#
        );
        assert_eq!(kac_table(&m(3, 4)).classes.len(), 3);
    }

    #[test]
    fn omega0_two_routes() {
        let md = m(2, 3);
        let w = omega_poly(&md, 0).unwrap();
        assert!(w.certificate().pass);
        let expect = Poly::new(vec![
            QuadScalar::zero(),
            -md.alpha0.clone(),
            QuadScalar::one(),
        ])
        .scale(&QuadScalar::from_rational(&rat(3, 2)));
        assert_eq!(w.poly, expect);
        assert_eq!(
            to_h_poly(&md, &w.poly).unwrap(),
            Poly::new(vec![rat(0, 1), rat(3, 1)])
        );
        assert!(matches!(
            omega_poly(&md, 3),
            Err(Error::DegreeGuardExceeded(_))
        ));
    }

    #[test]
    fn omega_vanishes_at_origin() {
        for (a, b) in [(2, 3), (2, 5)] {
            let md = m(a, b);
            for n in 0..=1 {
                assert!(omega_poly(&md, n)
                    .unwrap()
                    .poly
                    .eval(&QuadScalar::zero())
                    .is_zero());
            }
        }
    }

    #[test]
    fn omega1_two_routes_and_degree() {
        let md = m(2, 3);
        let w = omega_poly(&md, 1).unwrap();
        assert_eq!(w.poly.degree(), Some(15));
        assert!(w.certificate().pass);
    }

    #[test]
    fn h_conversion() {
        let md = m(2, 3);
        let b = Poly::<QuadScalar>::x();
        let bb = &b * &(&b - &Poly::constant(md.alpha0.clone()));
        assert_eq!(
            to_h_poly(&md, &bb).unwrap(),
            Poly::new(vec![rat(0, 1), rat(2, 1)])
        );
        assert_eq!(to_h_poly(&md, &Poly::one()).unwrap(), Poly::one());
        assert_eq!(to_h_poly(&md, &b), Err(Error::NotSymmetric));
    }

    #[test]
    fn zhu_table_structure() {
        let t = zhu_table();
        assert!(t.product(-1, -1).is_zero());
        assert!(t.commutators_consistent());
        let probes = t.probes().unwrap();
        assert_eq!(probes.len(), 27);
        let p = probes.iter().find(|p| p.triple == (-1, 0, 0)).unwrap();
        let expect = ZhuElement::w(-1, FG::monomial(1, 2, 0).add(&FG::monomial(-1, 0, 1)));
        assert_eq!(p.defect, expect);
    }

    #[test]
    fn broken_table_is_rejected() {
        let mut t = zhu_table();
        t.products[1][1] = ZhuElement::scalar(FG::monomial(2, 0, 1));
        assert!(matches!(t.probes(), Err(Error::InconsistentTable(_))));
    }

    #[test]
    fn census_counts() {
        let c = simple_census(&m(2, 3)).unwrap();
        assert_eq!(c.len(), 13);
        assert!(c
            .iter()
            .filter(|d| d.kind == SimpleKind::Xminus)
            .all(|d| d.dim == 2));
    }

    #[test]
    fn g_polys_at_23() {
        let md = m(2, 3);
        let gp = g_polys(&md).unwrap();
        assert_eq!(gp.g[0], Poly::new(vec![rat(0, 1), rat(3, 1)]));
        assert_eq!(gp.g[1].degree(), Some(15));
        assert_eq!(gp.g[2].degree(), Some(20));
        assert!(gp.certificates.iter().all(|c| c.pass));
        for d in simple_census(&md).unwrap() {
            assert!(rep_check(&gp, &d).unwrap().pass);
            let off = SimpleModuleDescriptor {
                delta: &d.delta + rat(1, 7),
                ..d
            };
            assert!(matches!(
                rep_check(&gp, &off),
                Err(Error::RelationViolated(_))
            ));
        }
    }

    #[test]
    fn wrong_pattern_is_reported() {
        let g = Poly::new(vec![rat(0, 1), rat(0, 1), rat(1, 1)]);
        let pat = BTreeMap::from([(rat(0, 1), 1)]);
        assert!(matches!(
            certify_roots("x", &g, &pat),
            Err(Error::FactorizationMismatch(_))
        ));
        let pat = BTreeMap::from([(rat(0, 1), 3)]);
        assert!(matches!(
            certify_roots("x", &g, &pat),
            Err(Error::FactorizationMismatch(_))
        ));
        let pat = BTreeMap::from([(rat(0, 1), 2)]);
        assert!(certify_roots("x", &g, &pat).unwrap().pass);
    }
}
