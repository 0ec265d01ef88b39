//! Ordinary character tables of `S_t` and of the hyperoctahedral group `W_n`,
//! the block-diagonal matrix `Y`, and centralizer orders.
//!
//! Tables are oriented with classes as rows and characters as columns.

use std::collections::{BTreeMap, HashMap};

use crate::matrix::LabeledMatrix;
use crate::monoid::{all_perms, MonoidContext, PartialPerm};
use crate::partition::{
    enumerate_bipartitions, enumerate_partitions, enumerate_qn, BiPartition, MonoidKind, MunnIndex,
    Partition,
};

/// `χ_λ(μ)` by the Murnaghan–Nakayama rule on beta-sets.
pub fn mn_character(lambda: &Partition, mu: &Partition) -> i64 {
    fn rec(beta: &mut Vec<usize>, mu: &[usize], memo: &mut HashMap<(Vec<usize>, usize), i64>) -> i64 {
        let Some((&k, rest)) = mu.split_first() else { return 1 };
        let key = (beta.clone(), mu.len());
        if let Some(&v) = memo.get(&key) {
            return v;
        }
        let mut total = 0;
        for i in 0..beta.len() {
            let b = beta[i];
            if b < k || beta.contains(&(b - k)) {
                continue;
            }
            let between = beta.iter().filter(|&&x| x > b - k && x < b).count();
            let sign = if between % 2 == 0 { 1 } else { -1 };
            beta[i] = b - k;
            total += sign * rec(beta, rest, memo);
            beta[i] = b;
        }
        memo.insert(key, total);
        total
    }
    if lambda.size() != mu.size() {
        return 0;
    }
    let l = lambda.len();
    let mut beta: Vec<usize> = lambda.parts().iter().enumerate().map(|(i, &p)| p + l - 1 - i).collect();
    rec(&mut beta, mu.parts(), &mut HashMap::new())
}

pub fn symmetric_group_table(t: usize) -> LabeledMatrix<i64> {
    let labels: Vec<MunnIndex> = enumerate_partitions(t).into_iter().map(MunnIndex::Part).collect();
    LabeledMatrix::from_fn(labels.clone(), labels, |class, chr| match (class, chr) {
        (MunnIndex::Part(mu), MunnIndex::Part(la)) => mn_character(la, mu),
        _ => unreachable!(),
    })
}

/// Signed-permutation helpers for `W_n` acting on `{1..2n}`.
struct SignedPerms<'a> {
    ctx: &'a MonoidContext,
}

impl SignedPerms<'_> {
    fn pair(&self, x: usize) -> usize {
        x.min(self.ctx.degree() + 1 - x)
    }

    /// Whether `w` maps the pairs `a..b` (1-based, half-open) among themselves.
    fn preserves(&self, w: &PartialPerm, a: usize, b: usize) -> bool {
        (a..b).all(|i| (a..b).contains(&self.pair(w.apply(i))))
    }

    /// Underlying permutation of pairs `a..b`, relabelled to `{1..b-a}`.
    fn project(&self, w: &PartialPerm, a: usize, b: usize) -> Partition {
        let image: Vec<usize> = (a..b).map(|i| self.pair(w.apply(i)) + 1 - a).collect();
        let p = PartialPerm::new(image).unwrap();
        p.restricted_cycle_type(&p.domain()).unwrap()
    }

    /// `(-1)^(number of pairs in a..b sent to the barred side)`.
    fn sign(&self, w: &PartialPerm, a: usize, b: usize) -> i64 {
        let neg = (a..b).filter(|&i| w.apply(i) > self.ctx.n).count();
        if neg % 2 == 0 {
            1
        } else {
            -1
        }
    }
}

/// `χ_{(λ,μ)}(w) = Ind_{W_a × W_b}^{W_n} ((χ_λ∘π) ⊠ (χ_μ∘π)·ε)(w)`, by the explicit
/// induced-character sum over the whole group.
pub fn hyperoctahedral_character(ctx: &MonoidContext, chi: &BiPartition, w: &PartialPerm) -> i64 {
    let sp = SignedPerms { ctx };
    let a = chi.positive.size();
    let n = ctx.n;
    let units = ctx.units();
    let mut total = 0i64;
    for x in units {
        let c = x.compose(w).compose(&x.inverse());
        if !sp.preserves(&c, 1, a + 1) {
            continue;
        }
        let left = mn_character(&chi.positive, &sp.project(&c, 1, a + 1));
        let right = mn_character(&chi.negative, &sp.project(&c, a + 1, n + 1)) * sp.sign(&c, a + 1, n + 1);
        total += left * right;
    }
    let h = (crate::partition::factorial(a) << a) * (crate::partition::factorial(n - a) << (n - a));
    assert_eq!(total % h as i64, 0, "induced character sum not divisible");
    total / h as i64
}

pub fn hyperoctahedral_table(n: usize) -> LabeledMatrix<i64> {
    let ctx = MonoidContext::new(MonoidKind::Symplectic, n);
    hyperoctahedral_table_in(&ctx)
}

pub fn hyperoctahedral_table_in(ctx: &MonoidContext) -> LabeledMatrix<i64> {
    let labels: Vec<MunnIndex> = enumerate_bipartitions(ctx.n).into_iter().map(MunnIndex::Bip).collect();
    LabeledMatrix::from_fn(labels.clone(), labels, |class, chr| match chr {
        MunnIndex::Bip(b) => hyperoctahedral_character(ctx, b, &ctx.class_representative(class)),
        _ => unreachable!(),
    })
}

/// Block-diagonal `Y`: the unit-group table (symplectic only), then `S_t` for `t = n..0`.
pub fn assemble_y(kind: MonoidKind, n: usize) -> LabeledMatrix<i64> {
    let order = enumerate_qn(kind, n);
    let mut y = LabeledMatrix::zeros(order.labels.clone(), order.labels.clone());
    let mut blocks = Vec::new();
    if kind == MonoidKind::Symplectic {
        blocks.push(hyperoctahedral_table(n));
    }
    blocks.extend((0..=n).rev().map(symmetric_group_table));
    let mut off = 0;
    for b in blocks {
        for i in 0..b.nrows() {
            for j in 0..b.ncols() {
                y.entries[off + i][off + j] = b.entries[i][j];
            }
        }
        off += b.nrows();
    }
    y
}

/// `z_α` for every `α ∈ Q_n`, by brute-force centralizer counts in the group
/// containing the class representative.
pub fn centralizer_orders(kind: MonoidKind, n: usize) -> BTreeMap<MunnIndex, u64> {
    let ctx = MonoidContext::new(kind, n);
    let mut out = BTreeMap::new();
    for label in enumerate_qn(kind, n).labels {
        let z = match &label {
            MunnIndex::Bip(_) => {
                let w = ctx.class_representative(&label);
                ctx.units().iter().filter(|x| x.compose(&w) == w.compose(x)).count() as u64
            }
            MunnIndex::Part(p) => {
                let t = p.size();
                let mut image: Vec<usize> = (1..=t).collect();
                let mut a = 0;
                for &k in p.parts() {
                    for i in 0..k {
                        image[a + i] = a + (i + 1) % k + 1;
                    }
                    a += k;
                }
                let w = PartialPerm::new(image).unwrap();
                all_perms(t).iter().filter(|x| x.compose(&w) == w.compose(x)).count() as u64
            }
        };
        out.insert(label, z);
    }
    out
}
