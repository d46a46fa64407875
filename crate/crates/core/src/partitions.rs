//! Integer partitions, box statistics and dominance order.

use std::cmp::Ordering;
use std::fmt;
use std::ops::Index;

use num_bigint::BigInt;
use serde_json::Value;

use crate::error::{Error, Result};
use crate::scalars::Rational;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition {
    parts: Vec<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Dominance {
    Greater,
    Less,
    Equal,
    Incomparable,
}

/// Arm, leg, co-arm and co-leg of a box.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BoxStats {
    pub arm: usize,
    pub leg: usize,
    pub coarm: usize,
    pub coleg: usize,
}

impl Partition {
    /// Builds a partition from weakly decreasing parts; zero parts are dropped.
    pub fn new(parts: Vec<usize>) -> Self {
        assert!(
            parts.windows(2).all(|w| w[0] >= w[1]),
            "Partition parts must be in non-increasing order"
        );
        let mut parts = parts;
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Partition { parts }
    }

    /// Sorts arbitrary non-negative parts into a partition.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Self {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Self::new(parts)
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// `m^n`: the part `m` repeated `n` times.
    pub fn rect(m: usize, n: usize) -> Self {
        Self::new(vec![m; n])
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.parts.first().copied().unwrap_or(0);
        Partition {
            parts: (1..=width)
                .map(|j| self.parts.iter().take_while(|&&p| p >= j).count())
                .collect(),
        }
    }

    /// Boxes `(i, j)` in English convention, 1-based.
    pub fn boxes(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.parts
            .iter()
            .enumerate()
            .flat_map(|(i, &p)| (1..=p).map(move |j| (i + 1, j)))
    }

    pub fn box_stats(&self, i: usize, j: usize) -> Result<BoxStats> {
        if i == 0 || j == 0 || i > self.len() || j > self[i - 1] {
            return Err(Error::BoxOutOfDiagram(i, j));
        }
        let col = self.parts.iter().take_while(|&&p| p >= j).count();
        Ok(BoxStats {
            arm: self[i - 1] - j,
            leg: col - i,
            coarm: j - 1,
            coleg: i - 1,
        })
    }

    /// Statistics of every box, computed with one conjugation.
    pub fn all_box_stats(&self) -> Vec<BoxStats> {
        let conj = self.conjugate();
        self.boxes()
            .map(|(i, j)| BoxStats {
                arm: self[i - 1] - j,
                leg: conj[j - 1] - i,
                coarm: j - 1,
                coleg: i - 1,
            })
            .collect()
    }

    pub fn dominance_compare(&self, other: &Partition) -> Result<Dominance> {
        if self.size() != other.size() {
            return Err(Error::DegreeMismatch(self.size(), other.size()));
        }
        let (mut ge, mut le) = (true, true);
        let (mut a, mut b) = (0, 0);
        for k in 0..self.len().max(other.len()) {
            a += self[k];
            b += other[k];
            ge &= a >= b;
            le &= a <= b;
        }
        Ok(match (ge, le) {
            (true, true) => Dominance::Equal,
            (true, false) => Dominance::Greater,
            (false, true) => Dominance::Less,
            (false, false) => Dominance::Incomparable,
        })
    }

    pub fn dominates(&self, other: &Partition) -> bool {
        matches!(
            self.dominance_compare(other),
            Ok(Dominance::Greater | Dominance::Equal)
        )
    }

    /// `(part, multiplicity)` pairs in decreasing part order.
    pub fn multiplicities(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize)> = Vec::new();
        for &p in &self.parts {
            match out.last_mut() {
                Some((q, m)) if *q == p => *m += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }

    pub fn multiplicity(&self, part: usize) -> usize {
        self.parts.iter().filter(|&&p| p == part).count()
    }

    /// `z_λ = ∏ i^{m_i} m_i!`.
    pub fn z_factor(&self) -> Rational {
        let mut z = BigInt::from(1);
        for (i, m) in self.multiplicities() {
            for k in 1..=m {
                z *= BigInt::from(i) * BigInt::from(k);
            }
        }
        Rational::from_integer(z)
    }

    /// `∏ m_i!`.
    pub fn multiplicity_factorial(&self) -> BigInt {
        let mut f = BigInt::from(1);
        for (_, m) in self.multiplicities() {
            for k in 1..=m {
                f *= BigInt::from(k);
            }
        }
        f
    }

    /// Union of parts.
    pub fn union(&self, other: &Partition) -> Partition {
        let mut parts = self.parts.clone();
        parts.extend_from_slice(&other.parts);
        Self::from_unsorted(parts)
    }

    /// Removes one copy of `part`, if present.
    pub fn remove_part(&self, part: usize) -> Option<Partition> {
        let pos = self.parts.iter().position(|&p| p == part)?;
        let mut parts = self.parts.clone();
        parts.remove(pos);
        Some(Partition { parts })
    }

    pub fn add_part(&self, part: usize) -> Partition {
        let mut parts = self.parts.clone();
        let pos = parts.iter().position(|&p| p < part).unwrap_or(parts.len());
        parts.insert(pos, part);
        Partition::new(parts)
    }

    pub fn to_json(&self) -> Value {
        Value::from(self.parts.clone())
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let arr = v
            .as_array()
            .ok_or_else(|| Error::Parse(format!("expected partition array, got {v}")))?;
        let parts = arr
            .iter()
            .map(|x| {
                x.as_u64()
                    .map(|n| n as usize)
                    .ok_or_else(|| Error::Parse(format!("bad part {x}")))
            })
            .collect::<Result<Vec<_>>>()?;
        if !parts.windows(2).all(|w| w[0] >= w[1]) {
            return Err(Error::Parse("parts must be non-increasing".into()));
        }
        Ok(Self::new(parts))
    }

    /// Parses `"4,2,1"` (empty string is the empty partition).
    pub fn parse(s: &str) -> Result<Self> {
        let s = s.trim().trim_start_matches('(').trim_end_matches(')');
        if s.is_empty() {
            return Ok(Self::empty());
        }
        let parts = s
            .split(',')
            .map(|x| {
                x.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::Parse(format!("bad part {x:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::from_unsorted(parts))
    }
}

impl Index<usize> for Partition {
    type Output = usize;

    fn index(&self, index: usize) -> &usize {
        self.parts.get(index).unwrap_or(&0)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Reverse-lexicographic comparison: larger partitions (in dominance) first.
pub fn revlex(a: &Partition, b: &Partition) -> Ordering {
    b.parts.cmp(&a.parts)
}

/// All partitions of `d` in reverse-lexicographic order, optionally bounded in length.
pub fn enumerate_partitions(d: usize, max_len: Option<usize>) -> Vec<Partition> {
    fn go(
        rest: usize,
        max_part: usize,
        left: usize,
        cur: &mut Vec<usize>,
        out: &mut Vec<Partition>,
    ) {
        if rest == 0 {
            out.push(Partition { parts: cur.clone() });
            return;
        }
        if left == 0 {
            return;
        }
        for p in (1..=max_part.min(rest)).rev() {
            cur.push(p);
            go(rest - p, p, left - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(d, d, max_len.unwrap_or(d), &mut Vec::new(), &mut out);
    out
}

/// `p(0), …, p(n)` by the Euler pentagonal recurrence.
pub fn partition_counts(n: usize) -> Vec<u64> {
    let mut p = vec![0u64; n + 1];
    p[0] = 1;
    for m in 1..=n {
        let mut acc: i128 = 0;
        for k in 1.. {
            let g1 = k * (3 * k - 1) / 2;
            if g1 > m {
                break;
            }
            let sign = if k % 2 == 1 { 1 } else { -1 };
            acc += sign * p[m - g1] as i128;
            let g2 = k * (3 * k + 1) / 2;
            if g2 <= m {
                acc += sign * p[m - g2] as i128;
            }
        }
        p[m] = acc as u64;
    }
    p
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SpecialKind {
    Rect { m: usize, n: usize },
    LambdaPlus { n: i64, m: i64 },
    LambdaMinus { n: i64, m: i64 },
}

/// `λ⁺_{n,m} = ((n−m+1)p₋−1)^{(n+m+1)p₊−1}` and its conjugate `λ⁻_{n,m}`.
pub fn special_partition(kind: SpecialKind, pp: i64, pm: i64) -> Result<Partition> {
    let build = |part: i64, exp: i64| {
        if part < 1 || exp < 1 {
            Err(Error::EmptyPartition)
        } else {
            Ok(Partition::rect(part as usize, exp as usize))
        }
    };
    match kind {
        SpecialKind::Rect { m, n } => build(m as i64, n as i64),
        SpecialKind::LambdaPlus { n, m } => build((n - m + 1) * pm - 1, (n + m + 1) * pp - 1),
        SpecialKind::LambdaMinus { n, m } => build((n + m + 1) * pp - 1, (n - m + 1) * pm - 1),
    }
}
