//! Injective partial transformations of `{1..m}`.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::Partition;

/// An injective partial map stored as its image array: `image[i-1] = σ(i)`, 0 when undefined.
///
/// Products act on the left: `(a * b)(i) = a(b(i))`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct PartialPerm {
    image: Vec<usize>,
}

impl PartialPerm {
    pub fn new(image: Vec<usize>) -> Result<Self> {
        let m = image.len();
        let mut seen = vec![false; m + 1];
        for &v in &image {
            if v > m {
                return Err(Error::Parse(format!("image value {v} exceeds degree {m}")));
            }
            if v != 0 {
                if seen[v] {
                    return Err(Error::Parse(format!("image value {v} repeated")));
                }
                seen[v] = true;
            }
        }
        Ok(PartialPerm { image })
    }

    pub fn identity(m: usize) -> Self {
        PartialPerm { image: (1..=m).collect() }
    }

    pub fn zero(m: usize) -> Self {
        PartialPerm { image: vec![0; m] }
    }

    /// Identity on the points of `k`, undefined elsewhere.
    pub fn idempotent(m: usize, k: &BTreeSet<usize>) -> Self {
        PartialPerm { image: (1..=m).map(|i| if k.contains(&i) { i } else { 0 }).collect() }
    }

    /// Permutation given by disjoint cycles (1-based points).
    pub fn from_cycles(m: usize, cycles: &[&[usize]]) -> Self {
        let mut image: Vec<usize> = (1..=m).collect();
        for c in cycles {
            for (i, &a) in c.iter().enumerate() {
                image[a - 1] = c[(i + 1) % c.len()];
            }
        }
        PartialPerm { image }
    }

    pub fn degree(&self) -> usize {
        self.image.len()
    }

    pub fn image(&self) -> &[usize] {
        &self.image
    }

    /// `σ(i)`, 0 if undefined.
    pub fn apply(&self, i: usize) -> usize {
        if i == 0 {
            0
        } else {
            self.image[i - 1]
        }
    }

    pub fn rank(&self) -> usize {
        self.image.iter().filter(|&&v| v != 0).count()
    }

    pub fn is_unit(&self) -> bool {
        self.rank() == self.degree()
    }

    pub fn domain(&self) -> BTreeSet<usize> {
        (1..=self.degree()).filter(|&i| self.apply(i) != 0).collect()
    }

    pub fn range(&self) -> BTreeSet<usize> {
        self.image.iter().copied().filter(|&v| v != 0).collect()
    }

    pub fn compose(&self, rhs: &PartialPerm) -> PartialPerm {
        debug_assert_eq!(self.degree(), rhs.degree());
        PartialPerm { image: rhs.image.iter().map(|&v| self.apply(v)).collect() }
    }

    /// The inverse partial map.
    pub fn inverse(&self) -> PartialPerm {
        let mut image = vec![0; self.degree()];
        for (i, &v) in self.image.iter().enumerate() {
            if v != 0 {
                image[v - 1] = i + 1;
            }
        }
        PartialPerm { image }
    }

    pub fn image_of(&self, k: &BTreeSet<usize>) -> BTreeSet<usize> {
        k.iter().map(|&i| self.apply(i)).filter(|&v| v != 0).collect()
    }

    /// 0/1 matrix with column `j` carrying its 1 in row `σ(j)`.
    pub fn matrix(&self) -> Vec<Vec<i64>> {
        let m = self.degree();
        let mut a = vec![vec![0; m]; m];
        for j in 1..=m {
            let i = self.apply(j);
            if i != 0 {
                a[i - 1][j - 1] = 1;
            }
        }
        a
    }

    /// Splits off the invertible part: `(σ°, σ_∘, I°)`.
    pub fn omega_circle(&self) -> (PartialPerm, PartialPerm, BTreeSet<usize>) {
        let m = self.degree();
        let core: BTreeSet<usize> = (1..=m)
            .filter(|&i| {
                let mut x = i;
                for _ in 0..=m {
                    x = self.apply(x);
                    if x == 0 {
                        return false;
                    }
                }
                true
            })
            .collect();
        let mut on = vec![0; m];
        let mut off = self.image.clone();
        for &i in &core {
            on[i - 1] = self.image[i - 1];
            off[i - 1] = 0;
        }
        (PartialPerm { image: on }, PartialPerm { image: off }, core)
    }

    /// Cycles of `σ°`, each listed from its smallest point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let (_, _, core) = self.omega_circle();
        let mut done = BTreeSet::new();
        let mut out = Vec::new();
        for &i in &core {
            if done.contains(&i) {
                continue;
            }
            let mut c = vec![i];
            done.insert(i);
            let mut x = self.apply(i);
            while x != i {
                c.push(x);
                done.insert(x);
                x = self.apply(x);
            }
            out.push(c);
        }
        out
    }

    /// Cycle type of `σ` restricted to a stable set `k`.
    pub fn restricted_cycle_type(&self, k: &BTreeSet<usize>) -> Result<Partition> {
        if self.image_of(k) != *k || k.iter().any(|&i| self.apply(i) == 0) {
            return Err(Error::InvalidK(format!("{k:?}")));
        }
        let mut done = BTreeSet::new();
        let mut parts = Vec::new();
        for &i in k {
            if done.insert(i) {
                let mut len = 1;
                let mut x = self.apply(i);
                while x != i {
                    done.insert(x);
                    len += 1;
                    x = self.apply(x);
                }
                parts.push(len);
            }
        }
        Ok(Partition::new(parts))
    }
}

pub fn bar(i: usize, m: usize) -> usize {
    m + 1 - i
}

/// Everything, or no pair `{i, ī}`.
pub fn is_admissible(k: &BTreeSet<usize>, m: usize) -> bool {
    k.len() == m || k.iter().all(|&i| !k.contains(&bar(i, m)))
}

/// Membership in `RSp_{2n}` by the admissible-set definition.
pub fn is_symplectic_by_sets(s: &PartialPerm) -> bool {
    let m = s.degree();
    if s.is_unit() {
        // bijective and sends admissible sets to admissible sets; checking two-point sets suffices
        (1..=m).all(|i| {
            (1..=m).all(|j| j == i || j == bar(i, m) || s.apply(j) != bar(s.apply(i), m))
        })
    } else {
        is_admissible(&s.domain(), m) && is_admissible(&s.range(), m)
    }
}

/// Membership in `RSp_{2n}` by the matrix criterion `AᵀJA = AJAᵀ ∈ {0, J}`.
pub fn is_symplectic_by_matrix(s: &PartialPerm) -> bool {
    let m = s.degree();
    let a = s.matrix();
    let j: Vec<Vec<i64>> =
        (0..m).map(|r| (0..m).map(|c| (c == m - 1 - r) as i64).collect()).collect();
    let mul = |x: &Vec<Vec<i64>>, y: &Vec<Vec<i64>>| -> Vec<Vec<i64>> {
        (0..m).map(|r| (0..m).map(|c| (0..m).map(|k| x[r][k] * y[k][c]).sum()).collect()).collect()
    };
    let t: Vec<Vec<i64>> = (0..m).map(|r| (0..m).map(|c| a[c][r]).collect()).collect();
    let left = mul(&mul(&t, &j), &a);
    let right = mul(&mul(&a, &j), &t);
    let zero = vec![vec![0; m]; m];
    left == right && (left == zero || left == j)
}

/// Membership in `RSp_{2n}`, evaluated by both criteria.
pub fn is_symplectic(s: &PartialPerm) -> Result<bool> {
    if !s.degree().is_multiple_of(2) {
        return Ok(false);
    }
    let a = is_symplectic_by_sets(s);
    if a != is_symplectic_by_matrix(s) {
        return Err(Error::DefinitionMismatch(s.to_string()));
    }
    Ok(a)
}

/// Every injective partial map of `{1..m}`.
pub fn all_partial_perms(m: usize) -> Vec<PartialPerm> {
    fn rec(i: usize, m: usize, used: &mut Vec<bool>, cur: &mut Vec<usize>, out: &mut Vec<PartialPerm>) {
        if i == m {
            out.push(PartialPerm { image: cur.clone() });
            return;
        }
        cur.push(0);
        rec(i + 1, m, used, cur, out);
        cur.pop();
        for v in 1..=m {
            if !used[v] {
                used[v] = true;
                cur.push(v);
                rec(i + 1, m, used, cur, out);
                cur.pop();
                used[v] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(0, m, &mut vec![false; m + 1], &mut Vec::new(), &mut out);
    out
}

/// All permutations of `{1..m}`.
pub fn all_perms(m: usize) -> Vec<PartialPerm> {
    all_partial_perms(m).into_iter().filter(|p| p.is_unit()).collect()
}

impl fmt::Debug for PartialPerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for PartialPerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.image.iter().map(|v| v.to_string()).collect();
        write!(f, "[{}]", s.join(","))
    }
}

impl FromStr for PartialPerm {
    type Err = Error;
    /// Comma-separated image array, brackets optional: `0,0,2,0` or `[0,0,2,0]`.
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim().trim_start_matches('[').trim_end_matches(']');
        let image = t
            .split(',')
            .map(|x| x.trim().parse::<usize>().map_err(|_| Error::Parse(format!("bad image array `{s}`"))))
            .collect::<Result<Vec<_>>>()?;
        PartialPerm::new(image)
    }
}
