//! The decomposition `M = A·Y = Y·B` of a monoid character table, and the direct
//! class-function oracle it is checked against.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::error::{Error, Result};
use crate::group_tables::{
    assemble_y, centralizer_orders, hyperoctahedral_character, mn_character,
};
use crate::matrix::{to_rational, LabeledMatrix};
use crate::monoid::{MonoidContext, PartialPerm};
use crate::partition::{
    enumerate_partitions, enumerate_qn, is_horizontal_strip, lr_coefficient, multiplicity_binomial,
    MonoidKind, MunnIndex,
};

#[derive(Clone, Debug, PartialEq)]
pub struct SolomonDecomposition {
    pub m: LabeledMatrix<i64>,
    pub a: LabeledMatrix<i64>,
    pub b: LabeledMatrix<i64>,
    pub y: LabeledMatrix<i64>,
}

/// Rows are classes, columns the classes of the lower blocks.
pub fn a_matrix(kind: MonoidKind, n: usize) -> LabeledMatrix<i64> {
    let labels = enumerate_qn(kind, n).labels;
    LabeledMatrix::from_fn(labels.clone(), labels, |row, col| match (row, col) {
        (MunnIndex::Bip(_), MunnIndex::Bip(_)) => (row == col) as i64,
        (MunnIndex::Bip(g), MunnIndex::Part(l)) => {
            (multiplicity_binomial(&g.positive, l) << l.total_multiplicity()) as i64
        }
        (MunnIndex::Part(a), MunnIndex::Part(l)) => multiplicity_binomial(a, l) as i64,
        (MunnIndex::Part(_), MunnIndex::Bip(_)) => 0,
    })
}

/// Rows are characters of the maximal subgroups, columns monoid characters.
pub fn b_matrix(kind: MonoidKind, n: usize) -> LabeledMatrix<i64> {
    let labels = enumerate_qn(kind, n).labels;
    LabeledMatrix::from_fn(labels.clone(), labels, |row, col| match (row, col) {
        (MunnIndex::Bip(_), MunnIndex::Bip(_)) => (row == col) as i64,
        (MunnIndex::Bip(gm), MunnIndex::Part(nu)) => {
            let (gamma, mu) = (&gm.positive, &gm.negative);
            let strip = n - nu.size();
            if strip > gamma.size() {
                return 0;
            }
            enumerate_partitions(gamma.size() - strip)
                .iter()
                .filter(|l| is_horizontal_strip(gamma, l))
                .map(|l| lr_coefficient(l, mu, nu) as i64)
                .sum()
        }
        (MunnIndex::Part(g), MunnIndex::Part(m)) => is_horizontal_strip(g, m) as i64,
        (MunnIndex::Part(_), MunnIndex::Bip(_)) => 0,
    })
}

pub fn monoid_table(kind: MonoidKind, n: usize) -> Result<SolomonDecomposition> {
    let a = a_matrix(kind, n);
    let b = b_matrix(kind, n);
    let y = assemble_y(kind, n);
    let m = a.mul(&y);
    let yb = y.mul(&b);
    if let Some((row, col)) = m.diff(&yb).into_iter().next() {
        return Err(Error::DecompositionMismatch { row: row.to_string(), col: col.to_string() });
    }
    Ok(SolomonDecomposition { m, a, b, y })
}

/// `χ_λ(σ)` evaluated directly: `Σ_{K ∈ C(t,σ)} χ̄_λ(σ_K)` for a rank-`t` character,
/// the group character on units for a unit-group character, and 0 on non-units.
pub fn llc_character_oracle(lambda: &MunnIndex, s: &PartialPerm, ctx: &MonoidContext) -> i64 {
    match lambda {
        MunnIndex::Bip(b) => {
            if s.is_unit() {
                hyperoctahedral_character(ctx, b, s)
            } else {
                0
            }
        }
        MunnIndex::Part(nu) => ctx
            .cycle_sets(s, nu.size())
            .iter()
            .map(|k| mn_character(nu, &s.restricted_cycle_type(k).unwrap()))
            .sum(),
    }
}

/// The table `χ_λ(r_α)` evaluated entrywise by [`llc_character_oracle`].
pub fn oracle_table(kind: MonoidKind, n: usize) -> LabeledMatrix<i64> {
    let ctx = MonoidContext::new(kind, n);
    let labels = enumerate_qn(kind, n).labels;
    LabeledMatrix::from_fn(labels.clone(), labels, |cls, chr| {
        llc_character_oracle(chr, &ctx.class_representative(cls), &ctx)
    })
}

/// `A_{α,λ} = |S_{λ, r_α}|` counted directly from stable sets.
pub fn a_matrix_by_counting(kind: MonoidKind, n: usize) -> LabeledMatrix<i64> {
    let ctx = MonoidContext::new(kind, n);
    let labels = enumerate_qn(kind, n).labels;
    LabeledMatrix::from_fn(labels.clone(), labels, |row, col| match col {
        MunnIndex::Bip(_) => (row == col) as i64,
        MunnIndex::Part(l) => {
            let r = ctx.class_representative(row);
            ctx.cycle_sets(&r, l.size())
                .iter()
                .filter(|k| r.restricted_cycle_type(k).unwrap() == *l)
                .count() as i64
        }
    })
}

/// Checks `Yᵀ · diag(z_α)⁻¹ · A · Y = B`; returns the differing positions.
pub fn verify_b_from_a(kind: MonoidKind, n: usize) -> Vec<(MunnIndex, MunnIndex)> {
    let y = to_rational(&assemble_y(kind, n));
    let a = to_rational(&a_matrix(kind, n));
    let b = to_rational(&b_matrix(kind, n));
    let z = centralizer_orders(kind, n);
    let labels = y.rows.clone();
    let winv = LabeledMatrix::from_fn(labels.clone(), labels, |r, c| {
        if r == c {
            BigRational::new(BigInt::from(1), BigInt::from(z[r]))
        } else {
            BigRational::from_integer(BigInt::from(0))
        }
    });
    y.transpose().mul(&winv).mul(&a).mul(&y).diff(&b)
}

/// Elements of the maximal subgroup at the idempotent of block `block` (`None` = units).
fn maximal_subgroup(ctx: &MonoidContext, block: Option<usize>) -> Vec<PartialPerm> {
    match block {
        None => ctx.units().to_vec(),
        Some(t) => {
            let e = ctx.idempotent(t);
            let mut v: Vec<PartialPerm> =
                ctx.stabilizer(t).iter().map(|w| e.compose(w).compose(&e)).collect();
            v.sort();
            v.dedup();
            v
        }
    }
}

/// `⟨Res_{G_e} χ_λ, χ̄_ψ⟩` for every character `ψ` of a maximal subgroup and every
/// monoid character `λ`, computed by class sums of oracle values.
pub fn restriction_multiplicities(kind: MonoidKind, n: usize) -> LabeledMatrix<i64> {
    let ctx = MonoidContext::new(kind, n);
    let labels = enumerate_qn(kind, n).labels;
    let mut groups: BTreeMap<Option<usize>, Vec<PartialPerm>> = BTreeMap::new();
    LabeledMatrix::from_fn(labels.clone(), labels, |psi, lambda| {
        let block = psi.rank();
        let g = groups.entry(block).or_insert_with(|| maximal_subgroup(&ctx, block));
        let sum: i64 = g
            .iter()
            .map(|x| {
                let local = match psi {
                    MunnIndex::Bip(b) => hyperoctahedral_character(&ctx, b, x),
                    MunnIndex::Part(p) => {
                        mn_character(p, &x.restricted_cycle_type(&x.domain()).unwrap())
                    }
                };
                llc_character_oracle(lambda, x, &ctx) * local
            })
            .sum();
        assert_eq!(sum % g.len() as i64, 0);
        sum / g.len() as i64
    })
}

/// `Ind_{S_t × W_{n-t}}^{W_n} (χ̄_ν ⊠ 1)(w)` by the explicit induction sum, where
/// `S_t` permutes the points `{1..t}` and `W_{n-t}` acts on the remaining pairs.
pub fn induced_young_character(ctx: &MonoidContext, nu: &crate::partition::Partition, w: &PartialPerm) -> i64 {
    assert_eq!(ctx.kind, MonoidKind::Symplectic);
    let t = nu.size();
    let k: std::collections::BTreeSet<usize> = (1..=t).collect();
    let mut total = 0;
    for x in ctx.units() {
        let c = x.compose(w).compose(&x.inverse());
        if c.image_of(&k) == k {
            total += mn_character(nu, &c.restricted_cycle_type(&k).unwrap());
        }
    }
    let h = crate::partition::factorial(t) as i64
        * ((crate::partition::factorial(ctx.n - t) as i64) << (ctx.n - t));
    assert_eq!(total % h, 0);
    total / h
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[usize]) -> MunnIndex {
        MunnIndex::part(v)
    }
    fn b(g: &[usize], d: &[usize]) -> MunnIndex {
        MunnIndex::bip(g, d)
    }

    #[test]
    fn a_entries() {
        let a = a_matrix(MonoidKind::Symplectic, 3);
        assert_eq!(a.at(&b(&[1, 1, 1], &[]), &p(&[1, 1])), Some(&12));
        assert_eq!(a.at(&b(&[2, 1], &[]), &p(&[1, 1])), Some(&0));
        assert_eq!(a.at(&b(&[2, 1], &[]), &p(&[])), Some(&1));
        assert_eq!(a.at(&p(&[1, 1, 1]), &p(&[1, 1])), Some(&3));
    }

    #[test]
    fn a_matches_stable_set_counts() {
        for kind in [MonoidKind::Rook, MonoidKind::Symplectic] {
            for n in 1..=3 {
                assert_eq!(a_matrix(kind, n), a_matrix_by_counting(kind, n), "{kind} {n}");
            }
        }
    }

    #[test]
    fn b_entries() {
        let bm = b_matrix(MonoidKind::Symplectic, 3);
        assert_eq!(bm.at(&b(&[2], &[1]), &p(&[1, 1])), Some(&1));
        assert_eq!(bm.at(&b(&[1, 1, 1], &[]), &p(&[2])), Some(&0));
        assert_eq!(bm.at(&b(&[3], &[]), &p(&[])), Some(&1));
        assert_eq!(bm.at(&b(&[1, 1, 1], &[]), &p(&[])), Some(&0));
    }

    #[test]
    fn decomposition_and_oracle_agree() {
        for kind in [MonoidKind::Rook, MonoidKind::Symplectic] {
            for n in 1..=3 {
                let d = monoid_table(kind, n).unwrap();
                assert_eq!(d.m, oracle_table(kind, n), "{kind} {n}");
                assert!(to_rational(&d.m).inverse().is_ok());
            }
        }
    }

    #[test]
    fn rook_one_is_unitriangular() {
        let d = monoid_table(MonoidKind::Rook, 1).unwrap();
        assert_eq!(d.m.entries, vec![vec![1, 1], vec![0, 1]]);
    }

    #[test]
    fn oracle_examples() {
        let ctx = MonoidContext::new(MonoidKind::Symplectic, 2);
        let e1 = crate::monoid::PartialPerm::idempotent(4, &[1].into_iter().collect());
        assert_eq!(llc_character_oracle(&p(&[1]), &e1, &ctx), 1);
        for r in ctx.elements() {
            assert_eq!(llc_character_oracle(&p(&[]), r, &ctx), 1);
        }
    }

    #[test]
    fn b_is_recovered_from_a() {
        for kind in [MonoidKind::Rook, MonoidKind::Symplectic] {
            for n in 1..=3 {
                assert!(verify_b_from_a(kind, n).is_empty());
            }
        }
    }

    #[test]
    fn b_is_restriction_multiplicity() {
        for kind in [MonoidKind::Rook, MonoidKind::Symplectic] {
            for n in 1..=2 {
                assert_eq!(restriction_multiplicities(kind, n), b_matrix(kind, n), "{kind} {n}");
            }
        }
    }

    #[test]
    fn restriction_to_units_is_induced() {
        for n in 1..=3 {
            let ctx = MonoidContext::new(MonoidKind::Symplectic, n);
            for t in 0..=n {
                for nu in enumerate_partitions(t) {
                    for w in ctx.units() {
                        assert_eq!(
                            llc_character_oracle(&MunnIndex::Part(nu.clone()), w, &ctx),
                            induced_young_character(&ctx, &nu, w)
                        );
                    }
                }
            }
        }
    }
}
