//! Partitions, bipartitions and the ordered index set `Q_n` of Munn classes.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Weakly decreasing list of positive parts; the empty list is the partition of 0.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition {
    parts: Vec<usize>,
    size: usize,
}

impl Partition {
    /// Builds a partition from parts in any order; zero parts are dropped.
    pub fn new(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        let size = parts.iter().sum();
        Partition { parts, size }
    }

    pub fn empty() -> Self {
        Partition::default()
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn largest(&self) -> usize {
        self.parts.first().copied().unwrap_or(0)
    }

    /// The `i`-th part (0-based), zero past the end.
    pub fn part(&self, i: usize) -> usize {
        self.parts.get(i).copied().unwrap_or(0)
    }

    /// Number of parts equal to `i`.
    pub fn multiplicity(&self, i: usize) -> usize {
        self.parts.iter().filter(|&&p| p == i).count()
    }

    /// Σ_i λ_(i), which is just the number of parts.
    pub fn total_multiplicity(&self) -> usize {
        self.parts.len()
    }

    /// Young-diagram containment.
    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && other.parts.iter().zip(&self.parts).all(|(a, b)| a <= b)
    }

    /// Product of factorials of parts, the order of the Young subgroup `S_λ`.
    pub fn young_order(&self) -> u64 {
        self.parts.iter().map(|&p| factorial(p)).product()
    }

    /// Centralizer order of a permutation of this cycle type in `S_|λ|`.
    pub fn centralizer_order(&self) -> u64 {
        let mut z = 1u64;
        for i in 1..=self.largest() {
            let m = self.multiplicity(i) as u32;
            z *= (i as u64).pow(m) * factorial(m as usize);
        }
        z
    }
}

pub fn factorial(n: usize) -> u64 {
    (1..=n as u64).product()
}

pub fn binomial(n: usize, k: usize) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k as u64).fold(1, |acc, i| acc * (n as u64 - i) / (i + 1))
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Digits stand alone; values above 9 are braced, as in `{12}` or `1^{10}`.
fn fmt_number(v: usize) -> String {
    if v < 10 {
        v.to_string()
    } else {
        format!("{{{v}}}")
    }
}

fn fmt_parts(p: &Partition) -> String {
    if p.is_empty() {
        return "0".into();
    }
    let mut s = String::new();
    let mut i = 0;
    while i < p.parts.len() {
        let v = p.parts[i];
        let mut j = i;
        while j < p.parts.len() && p.parts[j] == v {
            j += 1;
        }
        s.push_str(&fmt_number(v));
        if j - i > 1 {
            s.push('^');
            s.push_str(&fmt_number(j - i));
        }
        i = j;
    }
    s
}

fn parse_parts(s: &str) -> Result<Partition> {
    let bad = || Error::Parse(format!("bad partition `{s}`"));
    if s == "0" || s.is_empty() {
        return Ok(Partition::empty());
    }
    let chars: Vec<char> = s.chars().collect();
    let mut i = 0;
    let number = |i: &mut usize| -> Result<usize> {
        let c = *chars.get(*i).ok_or_else(bad)?;
        *i += 1;
        if c != '{' {
            return c.to_digit(10).map(|d| d as usize).ok_or_else(bad);
        }
        let start = *i;
        while *i < chars.len() && chars[*i] != '}' {
            *i += 1;
        }
        let v = chars[start..*i].iter().collect::<String>().parse().map_err(|_| bad())?;
        *i += 1;
        Ok(v)
    };
    let mut parts = Vec::new();
    while i < chars.len() {
        let d = number(&mut i)?;
        if d == 0 {
            return Err(bad());
        }
        let mut count = 1;
        if chars.get(i) == Some(&'^') {
            i += 1;
            count = number(&mut i)?;
        }
        parts.extend(std::iter::repeat_n(d, count));
    }
    if i > chars.len() {
        return Err(bad());
    }
    Ok(Partition::new(parts))
}

/// Notation: `(21)`, `(1^3)`, `(0)` for the empty partition.
impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", fmt_parts(self))
    }
}

impl FromStr for Partition {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let inner = s
            .trim()
            .strip_prefix('(')
            .and_then(|r| r.strip_suffix(')'))
            .ok_or_else(|| Error::Parse(format!("bad partition `{s}`")))?;
        parse_parts(inner)
    }
}

/// Pair `(γ, δ)`: positive and negative cycle types, or a W_n irreducible.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BiPartition {
    pub positive: Partition,
    pub negative: Partition,
}

impl BiPartition {
    pub fn new(positive: Partition, negative: Partition) -> Self {
        BiPartition { positive, negative }
    }

    pub fn total_size(&self) -> usize {
        self.positive.size() + self.negative.size()
    }
}

impl fmt::Debug for BiPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for BiPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", fmt_parts(&self.positive), fmt_parts(&self.negative))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum MonoidKind {
    Rook,
    Symplectic,
}

impl fmt::Display for MonoidKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            MonoidKind::Rook => "rook",
            MonoidKind::Symplectic => "symplectic",
        })
    }
}

/// A Munn class / irreducible label: a unit-group bipartition or a rank-`t` partition.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum MunnIndex {
    Bip(BiPartition),
    Part(Partition),
}

impl MunnIndex {
    /// Rank of the idempotent of this class; `None` for the unit group.
    pub fn rank(&self) -> Option<usize> {
        match self {
            MunnIndex::Bip(_) => None,
            MunnIndex::Part(p) => Some(p.size()),
        }
    }

    pub fn part(p: &[usize]) -> Self {
        MunnIndex::Part(Partition::new(p.to_vec()))
    }

    pub fn bip(g: &[usize], d: &[usize]) -> Self {
        MunnIndex::Bip(BiPartition::new(Partition::new(g.to_vec()), Partition::new(d.to_vec())))
    }

    /// Same block of the character table: both units, or both of the same rank.
    pub fn same_block(&self, other: &MunnIndex) -> bool {
        self.rank() == other.rank()
    }
}

impl fmt::Debug for MunnIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for MunnIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MunnIndex::Bip(b) => write!(f, "{b}"),
            MunnIndex::Part(p) => write!(f, "{p}"),
        }
    }
}

impl FromStr for MunnIndex {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let inner = s
            .trim()
            .strip_prefix('(')
            .and_then(|r| r.strip_suffix(')'))
            .ok_or_else(|| Error::Parse(format!("bad label `{s}`")))?;
        match inner.split_once(',') {
            Some((g, d)) => Ok(MunnIndex::Bip(BiPartition::new(parse_parts(g)?, parse_parts(d)?))),
            None => Ok(MunnIndex::Part(parse_parts(inner)?)),
        }
    }
}

impl Serialize for MunnIndex {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for MunnIndex {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// All partitions of `t`: increasing largest part, then lexicographic.
pub fn enumerate_partitions(t: usize) -> Vec<Partition> {
    fn rec(rem: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if rem == 0 {
            out.push(Partition::new(cur.clone()));
            return;
        }
        for p in (1..=rem.min(max)).rev() {
            cur.push(p);
            rec(rem - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(t, t, &mut Vec::new(), &mut out);
    out.sort_by(|a, b| a.largest().cmp(&b.largest()).then_with(|| a.parts.cmp(&b.parts)));
    out
}

/// Bipartitions of `n`: per underlying shape in partition order, every sign pattern
/// from all-positive up to all-negative in binary order, keeping first occurrences.
pub fn enumerate_bipartitions(n: usize) -> Vec<BiPartition> {
    let mut out: Vec<BiPartition> = Vec::new();
    for shape in enumerate_partitions(n) {
        let k = shape.len();
        for mask in 0u32..(1 << k) {
            let (mut g, mut d) = (Vec::new(), Vec::new());
            for (i, &p) in shape.parts.iter().enumerate() {
                if mask >> i & 1 == 1 {
                    d.push(p)
                } else {
                    g.push(p)
                }
            }
            let b = BiPartition::new(Partition::new(g), Partition::new(d));
            if !out.contains(&b) {
                out.push(b);
            }
        }
    }
    out
}

/// Ordered index set `Q_n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QnOrder {
    pub kind: MonoidKind,
    pub n: usize,
    pub labels: Vec<MunnIndex>,
}

impl QnOrder {
    pub fn position(&self, label: &MunnIndex) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    /// Index ranges of the diagonal blocks, unit group first.
    pub fn blocks(&self) -> Vec<std::ops::Range<usize>> {
        let mut out: Vec<std::ops::Range<usize>> = Vec::new();
        for (i, l) in self.labels.iter().enumerate() {
            match out.last_mut() {
                Some(r) if self.labels[r.start].same_block(l) => r.end = i + 1,
                _ => out.push(i..i + 1),
            }
        }
        out
    }
}

pub fn enumerate_qn(kind: MonoidKind, n: usize) -> QnOrder {
    let mut labels = Vec::new();
    if kind == MonoidKind::Symplectic {
        labels.extend(enumerate_bipartitions(n).into_iter().map(MunnIndex::Bip));
    }
    for t in (0..=n).rev() {
        labels.extend(enumerate_partitions(t).into_iter().map(MunnIndex::Part));
    }
    QnOrder { kind, n, labels }
}

/// ∏_i C(λ_(i), μ_(i)) over part multiplicities.
pub fn multiplicity_binomial(lambda: &Partition, mu: &Partition) -> u64 {
    let top = lambda.largest().max(mu.largest());
    (1..=top).map(|i| binomial(lambda.multiplicity(i), mu.multiplicity(i))).product()
}

/// `μ ⊆ λ` and `λ/μ` has at most one cell per column.
pub fn is_horizontal_strip(lambda: &Partition, mu: &Partition) -> bool {
    lambda.contains(mu) && (0..lambda.len()).all(|i| lambda.part(i + 1) <= mu.part(i))
}

pub fn pieri_coefficient(lambda: &Partition, l: usize, nu: &Partition) -> u64 {
    (nu.size() == lambda.size() + l && is_horizontal_strip(nu, lambda)) as u64
}

/// Littlewood–Richardson coefficient `c_{λμ}^ν` by enumerating LR tableaux of
/// shape `ν/λ` with content `μ`.
pub fn lr_coefficient(lambda: &Partition, mu: &Partition, nu: &Partition) -> u64 {
    if nu.size() != lambda.size() + mu.size() || !nu.contains(lambda) {
        return 0;
    }
    // skew cells in reverse reading order: top row first, right to left
    let cells: Vec<(usize, usize)> = (0..nu.len())
        .flat_map(|r| (lambda.part(r)..nu.part(r)).rev().map(move |c| (r, c)))
        .collect();
    let mut filling = vec![vec![0usize; nu.largest()]; nu.len()];
    let mut count = vec![0usize; mu.len() + 1];
    fn rec(
        idx: usize,
        cells: &[(usize, usize)],
        lambda: &Partition,
        nu: &Partition,
        mu: &Partition,
        filling: &mut Vec<Vec<usize>>,
        count: &mut Vec<usize>,
    ) -> u64 {
        let Some(&(r, c)) = cells.get(idx) else { return 1 };
        // values are 1-based letters
        let mut hi = mu.len();
        if c + 1 < nu.part(r) {
            hi = hi.min(filling[r][c + 1]);
        }
        let lo = if r > 0 && c >= lambda.part(r - 1) { filling[r - 1][c] + 1 } else { 1 };
        let mut total = 0;
        for v in lo..=hi {
            if count[v] >= mu.part(v - 1) || (v > 1 && count[v] + 1 > count[v - 1]) {
                continue;
            }
            count[v] += 1;
            filling[r][c] = v;
            total += rec(idx + 1, cells, lambda, nu, mu, filling, count);
            count[v] -= 1;
        }
        filling[r][c] = 0;
        total
    }
    rec(0, &cells, lambda, nu, mu, &mut filling, &mut count)
}
