//! Property tests for the structural invariants of the data types and tables.

use std::collections::BTreeSet;

use proptest::prelude::*;
use proptest::sample::select;

use renner_core::group_tables::centralizer_orders;
use renner_core::hecke::rewriter::{HeckeElement, Rewriter};
use renner_core::hecke::tables::{assemble_yq, hecke_monoid_table, transition_coefficients};
use renner_core::io::{Cache, CacheStatus, Metadata, TableArtifact, TableKind};
use renner_core::matrix::{to_rational, LabeledMatrix};
use renner_core::monoid::{MonoidContext, PartialPerm};
use renner_core::partition::{enumerate_bipartitions, enumerate_partitions, enumerate_qn, MonoidKind, MunnIndex};
use renner_core::qpoly::QRat;
use renner_core::solomon::monoid_table;

fn kind() -> impl Strategy<Value = MonoidKind> {
    select(vec![MonoidKind::Rook, MonoidKind::Symplectic])
}

fn small_partial_perm() -> impl Strategy<Value = PartialPerm> {
    (1usize..=6).prop_flat_map(|m| {
        (Just(m), proptest::collection::vec(0..=m, m), proptest::collection::vec(any::<bool>(), m))
    })
    .prop_map(|(m, seed, keep)| {
        // a random permutation of 1..m, then forget some points
        let mut pool: Vec<usize> = (1..=m).collect();
        let mut image = Vec::with_capacity(m);
        for (i, s) in seed.iter().enumerate() {
            let v = pool.remove(s % (m - i));
            image.push(if keep[i] { v } else { 0 });
        }
        PartialPerm::new(image).unwrap()
    })
}

fn is_block_unitriangular(m: &LabeledMatrix<i64>, kind: MonoidKind, n: usize) -> bool {
    let order = enumerate_qn(kind, n);
    let block_of = |l: &MunnIndex| order.blocks().iter().position(|b| b.contains(&order.position(l).unwrap())).unwrap();
    (0..m.nrows()).all(|i| {
        (0..m.ncols()).all(|j| {
            let (bi, bj) = (block_of(&m.rows[i]), block_of(&m.cols[j]));
            let v = m.entries[i][j];
            match bi.cmp(&bj) {
                std::cmp::Ordering::Equal => v == i64::from(i == j),
                std::cmp::Ordering::Greater => v == 0,
                std::cmp::Ordering::Less => true,
            }
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn partitions_are_weakly_decreasing_and_sized(t in 0usize..8) {
        for p in enumerate_partitions(t) {
            prop_assert!(p.parts().windows(2).all(|w| w[0] >= w[1]));
            prop_assert!(p.parts().iter().all(|&x| x >= 1));
            prop_assert_eq!(p.size(), t);
            prop_assert_eq!(p.parts().iter().sum::<usize>(), t);
        }
    }

    #[test]
    fn bipartitions_have_the_right_total(n in 0usize..6) {
        for b in enumerate_bipartitions(n) {
            prop_assert_eq!(b.total_size(), n);
            prop_assert_eq!(b.positive.size() + b.negative.size(), n);
        }
    }

    #[test]
    fn munn_order_is_a_permutation_with_bips_first(k in kind(), n in 1usize..6) {
        let order = enumerate_qn(k, n);
        let set: BTreeSet<_> = order.labels.iter().cloned().collect();
        prop_assert_eq!(set.len(), order.labels.len());
        let ranks: Vec<Option<usize>> = order.labels.iter().map(|l| l.rank()).collect();
        // bipartitions (no rank) first, then strictly decreasing rank blocks
        let first_part = ranks.iter().position(|r| r.is_some()).unwrap_or(ranks.len());
        prop_assert!(ranks[first_part..].iter().all(|r| r.is_some()));
        prop_assert!(ranks[first_part..].windows(2).all(|w| w[0] >= w[1]));
        for l in &order.labels {
            match l {
                MunnIndex::Bip(b) => prop_assert_eq!(b.total_size(), n),
                MunnIndex::Part(p) => prop_assert!(p.size() <= n),
            }
            prop_assert_eq!(&l.to_string().parse::<MunnIndex>().unwrap(), l);
        }
    }

    #[test]
    fn partial_perms_are_injective_with_consistent_rank(r in small_partial_perm()) {
        let nonzero: Vec<usize> = r.image().iter().copied().filter(|&v| v != 0).collect();
        let distinct: BTreeSet<usize> = nonzero.iter().copied().collect();
        prop_assert_eq!(distinct.len(), nonzero.len());
        prop_assert_eq!(r.rank(), nonzero.len());
        prop_assert_eq!(r.is_unit(), r.rank() == r.degree());
        prop_assert_eq!(r.compose(&r.inverse()), PartialPerm::idempotent(r.degree(), &r.range()));
        prop_assert_eq!(&r.to_string().parse::<PartialPerm>().unwrap(), &r);
    }

    #[test]
    fn normal_forms_reproduce_the_element(k in kind(), n in 1usize..3, idx in any::<prop::sample::Index>()) {
        let ctx = MonoidContext::new(k, n);
        let r = idx.get(ctx.elements()).clone();
        let nf = ctx.normal_form(&r).unwrap();
        prop_assert_eq!(nf.w1.compose(&nf.e).compose(&nf.w2), r.clone());
        let l1 = ctx.coxeter_length(&nf.w1).unwrap();
        let l2 = ctx.coxeter_length(&nf.w2).unwrap();
        prop_assert_eq!(nf.length, l1 + l2);
        // minimality among all factorizations through the same idempotent
        for a in ctx.units() {
            for b in ctx.units() {
                if a.compose(&nf.e).compose(b) == r {
                    prop_assert!(ctx.coxeter_length(a).unwrap() + ctx.coxeter_length(b).unwrap() >= nf.length);
                }
            }
        }
    }

    #[test]
    fn generators_are_involutions(k in kind(), n in 1usize..5) {
        let ctx = MonoidContext::new(k, n);
        for g in &ctx.generators {
            prop_assert_eq!(g.compose(g), ctx.identity());
        }
    }

    #[test]
    fn decompositions_hold_and_transition_matrices_are_unitriangular(k in kind(), n in 1usize..4) {
        let d = monoid_table(k, n).unwrap();
        prop_assert!(d.a.mul(&d.y).diff(&d.m).is_empty());
        prop_assert!(d.y.mul(&d.b).diff(&d.m).is_empty());
        prop_assert!(is_block_unitriangular(&d.a, k, n));
        prop_assert!(is_block_unitriangular(&d.b, k, n));
        prop_assert_eq!(d.m.nrows() * d.m.ncols(), d.m.entries.iter().map(Vec::len).sum::<usize>());
        prop_assert_eq!(&d.m.rows, &enumerate_qn(k, n).labels);
    }

    #[test]
    fn class_sizes_sum_to_the_group_order(k in kind(), n in 1usize..5) {
        let z = centralizer_orders(k, n);
        let order = enumerate_qn(k, n);
        for block in order.blocks() {
            let zs: Vec<u64> = order.labels[block].iter().map(|l| z[l]).collect();
            // the identity class is centralized by the whole group
            let group = *zs.iter().max().unwrap();
            prop_assert!(zs.iter().all(|&c| group.is_multiple_of(c)));
            prop_assert_eq!(zs.iter().map(|&c| group / c).sum::<u64>(), group);
        }
    }

    #[test]
    fn hecke_tables_are_integral_and_specialize(k in kind(), n in 1usize..3) {
        let mq = hecke_monoid_table(k, n).unwrap();
        prop_assert!(mq.check_integral().is_ok());
        prop_assert!(assemble_yq(k, n).unwrap().check_integral().is_ok());
        let m = monoid_table(k, n).unwrap().m;
        prop_assert!(mq.specialize(1).unwrap().diff(&to_rational(&m)).is_empty());
    }

    #[test]
    fn transition_coefficients_stay_in_blocks(k in kind(), n in 1usize..3) {
        let tc = transition_coefficients(k, n).unwrap();
        for (mu, row) in &tc.coefficients {
            for (gamma, c) in row {
                prop_assert!(c.is_zero() || mu.same_block(gamma), "{} {}", mu, gamma);
            }
        }
    }

    #[test]
    fn fractions_are_reduced_with_monic_denominators(a in -5i64..5, b in 1i64..5, k in 0i64..4) {
        let x = (&QRat::from_int(a) * &QRat::q_pow(k)).checked_div(&(&QRat::q() + &QRat::from_int(b))).unwrap();
        let y = &x * &(&QRat::q() + &QRat::from_int(b));
        prop_assert!(!x.denom().is_zero());
        prop_assert_eq!(x.denom().leading().unwrap(), &num_rational::BigRational::from_integer(1.into()));
        prop_assert!(y.is_polynomial());
        prop_assert_eq!(y.denom().degree(), Some(0));
    }

    #[test]
    fn hecke_elements_prune_zero_coefficients(i in 0usize..57, j in 0usize..57) {
        let ctx = MonoidContext::new(MonoidKind::Symplectic, 2);
        let rw = Rewriter::new(&ctx);
        let (x, y) = (ctx.elements()[i].clone(), ctx.elements()[j].clone());
        let mut h = HeckeElement::basis(x.clone());
        h.add_term(x.clone(), QRat::from_int(-1));
        prop_assert!(h.is_zero());
        let p = rw.multiply(&HeckeElement::basis(x), &HeckeElement::basis(y)).unwrap();
        for (r, c) in p.terms() {
            prop_assert!(!c.is_zero());
            prop_assert!(ctx.contains(r).unwrap());
        }
    }

    #[test]
    fn reductions_agree_with_every_character_at_one(k in kind(), idx in any::<prop::sample::Index>()) {
        let ctx = MonoidContext::new(k, 2);
        let rw = Rewriter::new(&ctx);
        let r = idx.get(ctx.elements());
        for e in rw.consistency_report(r).unwrap() {
            prop_assert!(e.ok(), "{} at {}", r, e.character);
        }
    }
}

#[test]
fn mismatched_order_version_is_never_served() {
    let dir = tempfile::tempdir().unwrap();
    let cache = Cache::at(dir.path());
    let meta = Metadata::new(MonoidKind::Rook, 2, TableKind::M);
    let d = monoid_table(MonoidKind::Rook, 2).unwrap();
    let (_, status) = cache.get_or_compute(&meta, || Ok(TableArtifact::from_matrix(meta.clone(), &d.m))).unwrap();
    assert_eq!(status, CacheStatus::Miss);
    // rewrite the stored entry as if produced under another ordering convention
    let path = cache.path_for(&meta).unwrap();
    let mut stored = TableArtifact::from_json(&std::fs::read_to_string(&path).unwrap()).unwrap();
    stored.metadata.order_version += 1;
    std::fs::write(&path, stored.to_json()).unwrap();
    let (fresh, status) = cache.get_or_compute(&meta, || Ok(TableArtifact::from_matrix(meta.clone(), &d.m))).unwrap();
    assert_eq!(status, CacheStatus::Stale);
    assert_eq!(fresh.metadata, meta);
}
