//! The rook monoid `R_n` and symplectic Renner monoid `RSp_2n` as concrete contexts:
//! Coxeter generators, cross-section lattice, lengths, normal forms and class data.

use std::collections::{BTreeSet, HashMap, VecDeque};
use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::partition::{BiPartition, MonoidKind, MunnIndex, Partition};

use super::perm::{all_partial_perms, bar, is_admissible, is_symplectic, PartialPerm};

/// Unique factorization `r = w1 · e · w2` with both units of minimal length.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NormalForm {
    pub w1: PartialPerm,
    /// Rank of the cross-section idempotent; `None` for the identity.
    pub rank: Option<usize>,
    pub e: PartialPerm,
    pub w2: PartialPerm,
    pub length: usize,
}

#[derive(Debug)]
pub struct MonoidContext {
    pub kind: MonoidKind,
    pub n: usize,
    /// Simple reflections; for the symplectic monoid `t_0` comes first.
    pub generators: Vec<PartialPerm>,
    pub generator_names: Vec<String>,
    /// Unit group in breadth-first (length) order.
    units: Vec<PartialPerm>,
    unit_info: HashMap<PartialPerm, (usize, Vec<usize>)>,
    elements: OnceLock<Vec<PartialPerm>>,
}

impl MonoidContext {
    pub fn new(kind: MonoidKind, n: usize) -> Self {
        assert!(n >= 1, "rank must be positive");
        let m = Self::degree_for(kind, n);
        let mut generators = Vec::new();
        let mut generator_names = Vec::new();
        if kind == MonoidKind::Symplectic {
            generators.push(PartialPerm::from_cycles(m, &[&[1, m]]));
            generator_names.push("t".to_string());
        }
        for i in 1..n {
            let s = match kind {
                MonoidKind::Rook => PartialPerm::from_cycles(m, &[&[i, i + 1]]),
                MonoidKind::Symplectic => {
                    PartialPerm::from_cycles(m, &[&[i, i + 1], &[bar(i + 1, m), bar(i, m)]])
                }
            };
            generators.push(s);
            generator_names.push(format!("s{i}"));
        }
        // breadth-first search over the Cayley graph, left multiplication
        let id = PartialPerm::identity(m);
        let mut unit_info = HashMap::new();
        let mut units = vec![id.clone()];
        unit_info.insert(id.clone(), (0, Vec::new()));
        let mut queue = VecDeque::from([id]);
        while let Some(w) = queue.pop_front() {
            let (l, word) = unit_info[&w].clone();
            for (gi, g) in generators.iter().enumerate() {
                let x = g.compose(&w);
                if !unit_info.contains_key(&x) {
                    let mut wd = vec![gi];
                    wd.extend(&word);
                    unit_info.insert(x.clone(), (l + 1, wd));
                    units.push(x.clone());
                    queue.push_back(x);
                }
            }
        }
        MonoidContext { kind, n, generators, generator_names, units, unit_info, elements: OnceLock::new() }
    }

    pub fn degree_for(kind: MonoidKind, n: usize) -> usize {
        match kind {
            MonoidKind::Rook => n,
            MonoidKind::Symplectic => 2 * n,
        }
    }

    /// Degree `m` of the underlying set `{1..m}`.
    pub fn degree(&self) -> usize {
        Self::degree_for(self.kind, self.n)
    }

    pub fn identity(&self) -> PartialPerm {
        PartialPerm::identity(self.degree())
    }

    pub fn units(&self) -> &[PartialPerm] {
        &self.units
    }

    /// Points fixed by the rank-`t` cross-section idempotent.
    ///
    /// For the rook monoid these are `{1..t}`. For the symplectic monoid they are
    /// `{n-t+1..n}`: with `t_0 = (1, 1̄)` as the special generator this is the choice
    /// whose stabilizer is a standard parabolic subgroup.
    pub fn cross_section_set(&self, t: usize) -> BTreeSet<usize> {
        match self.kind {
            MonoidKind::Rook => (1..=t).collect(),
            MonoidKind::Symplectic => (self.n + 1 - t..=self.n).collect(),
        }
    }

    pub fn idempotent(&self, t: usize) -> PartialPerm {
        PartialPerm::idempotent(self.degree(), &self.cross_section_set(t))
    }

    /// Cross-section lattice, lowest rank first, ending with the identity.
    pub fn cross_section(&self) -> Vec<PartialPerm> {
        let mut v: Vec<PartialPerm> = (0..=self.n).map(|t| self.idempotent(t)).collect();
        if self.kind == MonoidKind::Symplectic {
            v.push(self.identity());
        }
        v
    }

    pub fn is_admissible(&self, k: &BTreeSet<usize>) -> bool {
        match self.kind {
            MonoidKind::Rook => true,
            MonoidKind::Symplectic => is_admissible(k, self.degree()),
        }
    }

    pub fn contains(&self, r: &PartialPerm) -> Result<bool> {
        if r.degree() != self.degree() {
            return Ok(false);
        }
        match self.kind {
            MonoidKind::Rook => Ok(true),
            MonoidKind::Symplectic => is_symplectic(r),
        }
    }

    fn check_member(&self, r: &PartialPerm) -> Result<()> {
        if self.contains(r)? {
            Ok(())
        } else {
            Err(Error::NotInMonoid(r.to_string()))
        }
    }

    /// All monoid elements, computed on first use.
    pub fn elements(&self) -> &[PartialPerm] {
        self.elements.get_or_init(|| {
            all_partial_perms(self.degree())
                .into_iter()
                .filter(|r| self.contains(r).expect("membership criteria agree"))
                .collect()
        })
    }

    pub fn coxeter_length(&self, w: &PartialPerm) -> Option<usize> {
        self.unit_info.get(w).map(|x| x.0)
    }

    /// Breadth-first reduced word as generator indices, leftmost letter first.
    pub fn reduced_word(&self, w: &PartialPerm) -> Option<&[usize]> {
        self.unit_info.get(w).map(|x| x.1.as_slice())
    }

    pub fn word_to_element(&self, word: &[usize]) -> PartialPerm {
        word.iter().fold(self.identity(), |acc, &g| acc.compose(&self.generators[g]))
    }

    pub fn normal_form(&self, r: &PartialPerm) -> Result<NormalForm> {
        self.check_member(r)?;
        if r.is_unit() {
            return Ok(NormalForm {
                w1: r.clone(),
                rank: None,
                e: self.identity(),
                w2: self.identity(),
                length: self.coxeter_length(r).unwrap(),
            });
        }
        let t = r.rank();
        let k = self.cross_section_set(t);
        let dom = r.domain();
        let w2 = self.units.iter().find(|w| w.image_of(&dom) == k).unwrap().clone();
        let w2inv = w2.inverse();
        let w1 = self
            .units
            .iter()
            .find(|w| k.iter().all(|&i| w.apply(i) == r.apply(w2inv.apply(i))))
            .unwrap()
            .clone();
        let length = self.coxeter_length(&w1).unwrap() + self.coxeter_length(&w2).unwrap();
        Ok(NormalForm { w1, rank: Some(t), e: self.idempotent(t), w2, length })
    }

    pub fn length(&self, r: &PartialPerm) -> Result<usize> {
        Ok(self.normal_form(r)?.length)
    }

    /// `C(t, σ)`: admissible `σ`-stable subsets of `I°(σ)` of size `t`.
    pub fn cycle_sets(&self, s: &PartialPerm, t: usize) -> Vec<BTreeSet<usize>> {
        let cycles = s.cycles();
        let mut out = Vec::new();
        for mask in 0u64..(1 << cycles.len()) {
            let k: BTreeSet<usize> = cycles
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .flat_map(|(_, c)| c.iter().copied())
                .collect();
            if k.len() == t && self.is_admissible(&k) {
                out.push(k);
            }
        }
        out.sort();
        out
    }

    /// Signed cycle type `(γ, δ)` of a unit of the hyperoctahedral group.
    pub fn signed_cycle_type(&self, w: &PartialPerm) -> BiPartition {
        let m = self.degree();
        let mut seen = BTreeSet::new();
        let (mut pos, mut neg) = (Vec::new(), Vec::new());
        for i in 1..=self.n {
            if seen.contains(&i) {
                continue;
            }
            let mut len = 0;
            let mut x = i;
            loop {
                seen.insert(x.min(bar(x, m)));
                len += 1;
                x = w.apply(x);
                if x == i || x == bar(i, m) {
                    break;
                }
            }
            if x == i {
                pos.push(len)
            } else {
                neg.push(len)
            }
        }
        BiPartition::new(Partition::new(pos), Partition::new(neg))
    }

    /// Conjugacy-class label of a unit.
    pub fn unit_class(&self, w: &PartialPerm) -> MunnIndex {
        match self.kind {
            MonoidKind::Rook => MunnIndex::Part(w.restricted_cycle_type(&w.domain()).unwrap()),
            MonoidKind::Symplectic => MunnIndex::Bip(self.signed_cycle_type(w)),
        }
    }

    fn product(&self, gens: &[usize]) -> PartialPerm {
        self.word_to_element(gens)
    }

    fn s(&self, i: usize) -> usize {
        match self.kind {
            MonoidKind::Rook => i - 1,
            MonoidKind::Symplectic => i,
        }
    }

    /// Word of `b⁺_{m,a} = s_{m+1} ⋯ s_{m+a-1}`.
    fn b_plus(&self, m: usize, a: usize) -> Vec<usize> {
        (m + 1..m + a).map(|i| self.s(i)).collect()
    }

    /// Word of `b⁻_{m,a} = t_m s_{m+1} ⋯ s_{m+a-1}` with `t_m = s_m ⋯ s_1 t_0 s_1 ⋯ s_m`.
    fn b_minus(&self, m: usize, a: usize) -> Vec<usize> {
        let mut w: Vec<usize> = (1..=m).rev().map(|i| self.s(i)).collect();
        w.push(0);
        w.extend((1..=m).map(|i| self.s(i)));
        w.extend(self.b_plus(m, a));
        w
    }

    /// Word of the chosen class representative of a unit-group class.
    pub fn bip_representative_word(&self, b: &BiPartition) -> Vec<usize> {
        let mut word = Vec::new();
        let mut m = 0;
        let mut delta = b.negative.parts().to_vec();
        delta.reverse();
        for a in delta {
            word.extend(self.b_minus(m, a));
            m += a;
        }
        for &a in b.positive.parts() {
            word.extend(self.b_plus(m, a));
            m += a;
        }
        word
    }

    /// Permutation of cycle type `λ` made of contiguous increasing cycles on the
    /// rank-`|λ|` cross-section set, largest part first, as a word in the generators.
    pub fn part_permutation_word(&self, lambda: &Partition) -> Vec<usize> {
        let start = *self.cross_section_set(lambda.size()).iter().next().unwrap_or(&1);
        let mut word = Vec::new();
        let mut a = start;
        for &p in lambda.parts() {
            word.extend((a..a + p - 1).map(|i| self.s(i)));
            a += p;
        }
        word
    }

    /// Standard representative of a Munn class.
    pub fn class_representative(&self, alpha: &MunnIndex) -> PartialPerm {
        match alpha {
            MunnIndex::Bip(b) => {
                assert_eq!(self.kind, MonoidKind::Symplectic);
                assert_eq!(b.total_size(), self.n);
                self.product(&self.bip_representative_word(b))
            }
            MunnIndex::Part(l) => {
                let e = self.idempotent(l.size());
                e.compose(&self.product(&self.part_permutation_word(l))).compose(&e)
            }
        }
    }

    /// Munn class of an arbitrary element, by its invertible part on the cross-section set.
    ///
    /// Valid for elements `r` that lie in `e·W(e)·e`; other elements are first moved
    /// there by the reduction machinery.
    pub fn local_class(&self, r: &PartialPerm) -> Option<MunnIndex> {
        if r.is_unit() {
            return Some(self.unit_class(r));
        }
        let k = self.cross_section_set(r.rank());
        (r.domain() == k && r.range() == k)
            .then(|| MunnIndex::Part(r.restricted_cycle_type(&k).unwrap()))
    }

    /// Elements of `W(e_t)`: units stabilizing the rank-`t` set.
    pub fn stabilizer(&self, t: usize) -> Vec<PartialPerm> {
        let k = self.cross_section_set(t);
        self.units.iter().filter(|w| w.image_of(&k) == k).cloned().collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::{enumerate_bipartitions, enumerate_partitions, enumerate_qn, multiplicity_binomial};

    fn sym(n: usize) -> MonoidContext {
        MonoidContext::new(MonoidKind::Symplectic, n)
    }

    fn set(v: &[usize]) -> BTreeSet<usize> {
        v.iter().copied().collect()
    }

    #[test]
    fn group_orders_and_lengths() {
        for n in 1..=3 {
            let c = sym(n);
            assert_eq!(c.units().len(), (1..=n).product::<usize>() << n);
            // longest element of type B_n has length n^2
            assert_eq!(c.units().iter().filter_map(|w| c.coxeter_length(w)).max(), Some(n * n));
            let r = MonoidContext::new(MonoidKind::Rook, n);
            assert_eq!(r.units().len(), (1..=n).product::<usize>());
        }
        let c = sym(2);
        assert_eq!(c.coxeter_length(&c.identity()), Some(0));
        assert_eq!(c.coxeter_length(&c.generators[0]), Some(1));
    }

    #[test]
    fn coxeter_relations() {
        for n in 2..=3 {
            let c = sym(n);
            let g = &c.generators;
            let id = c.identity();
            let order = |w: &PartialPerm| (1..=8).find(|&k| (0..k).fold(id.clone(), |a, _| a.compose(w)) == id);
            for i in 0..g.len() {
                assert_eq!(order(&g[i]), Some(2));
                for j in i + 1..g.len() {
                    let expected = match (i, j) {
                        (0, 1) => 4,
                        _ if j == i + 1 => 3,
                        _ => 2,
                    };
                    assert_eq!(order(&g[i].compose(&g[j])), Some(expected), "{i} {j}");
                }
            }
        }
    }

    #[test]
    fn reduced_words_multiply_back() {
        let c = sym(3);
        for w in c.units() {
            let word = c.reduced_word(w).unwrap();
            assert_eq!(c.word_to_element(word), *w);
            assert_eq!(word.len(), c.coxeter_length(w).unwrap());
        }
    }

    #[test]
    fn t0_t1_has_length_four() {
        let c = sym(2);
        // t_1 = s_1 t_0 s_1
        let t1 = c.word_to_element(&[1, 0, 1]);
        assert_eq!(c.coxeter_length(&c.generators[0].compose(&t1)), Some(4));
    }

    #[test]
    fn block_cycle_forms() {
        let c = sym(3);
        let rep = c.class_representative(&MunnIndex::bip(&[3], &[]));
        // (1,2,3)(1̄,2̄,3̄) with 1̄ = 6, 2̄ = 5, 3̄ = 4
        assert_eq!(rep, PartialPerm::from_cycles(6, &[&[1, 2, 3], &[6, 5, 4]]));
        let c1 = sym(1);
        assert_eq!(c1.class_representative(&MunnIndex::bip(&[], &[1])), c1.generators[0]);
        // b⁻_{0,2} = t_0 s_1 is a negative 2-cycle: 1 -> 2 -> 1̄
        let neg = sym(2).class_representative(&MunnIndex::bip(&[], &[2]));
        assert_eq!(neg.apply(1), 2);
        assert_eq!(neg.apply(2), 4);
    }

    #[test]
    fn representatives_lie_in_their_classes() {
        for n in 1..=3 {
            let c = sym(n);
            for b in enumerate_bipartitions(n) {
                let w = c.class_representative(&MunnIndex::Bip(b.clone()));
                assert_eq!(c.signed_cycle_type(&w), b);
            }
            for l in enumerate_qn(MonoidKind::Symplectic, n).labels {
                if let MunnIndex::Part(p) = &l {
                    let r = c.class_representative(&l);
                    assert_eq!(r.rank(), p.size());
                    assert_eq!(c.local_class(&r), Some(l.clone()));
                    assert!(c.contains(&r).unwrap());
                }
            }
        }
        let r = MonoidContext::new(MonoidKind::Rook, 3);
        for l in enumerate_qn(MonoidKind::Rook, 3).labels {
            assert_eq!(r.local_class(&r.class_representative(&l)), Some(l));
        }
        assert_eq!(sym(2).class_representative(&MunnIndex::part(&[])), PartialPerm::zero(4));
    }

    #[test]
    fn representatives_have_minimal_length_in_class() {
        for n in 1..=3 {
            let c = sym(n);
            for b in enumerate_bipartitions(n) {
                let w = c.class_representative(&MunnIndex::Bip(b.clone()));
                let min = c
                    .units()
                    .iter()
                    .filter(|u| c.signed_cycle_type(u) == b)
                    .map(|u| c.coxeter_length(u).unwrap())
                    .min();
                assert_eq!(c.coxeter_length(&w), min, "{b}");
            }
        }
    }

    #[test]
    fn cycle_set_examples() {
        let c = sym(3);
        let w = c.class_representative(&MunnIndex::bip(&[3], &[]));
        assert_eq!(c.cycle_sets(&w, 3), vec![set(&[1, 2, 3]), set(&[4, 5, 6])]);
        let c2 = sym(2);
        assert_eq!(c2.cycle_sets(&c2.identity(), 1), vec![set(&[1]), set(&[2]), set(&[3]), set(&[4])]);
        assert_eq!(c2.cycle_sets(&c2.generators[0], 0), vec![BTreeSet::new()]);
        // a fixed pair {1, 1̄} is not admissible
        assert!(!c2.cycle_sets(&c2.identity(), 2).contains(&set(&[1, 4])));
    }

    /// |S_{λ,w_α}| = 2^{Σ λ_(i)} · binom(γ, λ).
    #[test]
    fn stable_set_counts() {
        for n in 1..=3 {
            let c = sym(n);
            for b in enumerate_bipartitions(n) {
                let w = c.class_representative(&MunnIndex::Bip(b.clone()));
                for t in 0..=n {
                    for l in enumerate_partitions(t) {
                        let count = c
                            .cycle_sets(&w, t)
                            .iter()
                            .filter(|k| w.restricted_cycle_type(k).unwrap() == l)
                            .count() as u64;
                        let expect = (1u64 << l.total_multiplicity()) * multiplicity_binomial(&b.positive, &l);
                        assert_eq!(count, expect, "{b} {l}");
                    }
                }
            }
        }
    }

    #[test]
    fn normal_form_basics() {
        let c = sym(2);
        let w = c.generators[1].compose(&c.generators[0]);
        let nf = c.normal_form(&w).unwrap();
        assert_eq!((nf.w1.clone(), nf.rank, nf.length), (w, None, 2));
        let e = c.idempotent(1);
        let nf = c.normal_form(&e).unwrap();
        assert_eq!((nf.length, nf.w1, nf.w2), (0, c.identity(), c.identity()));
        assert!(matches!(
            c.normal_form(&PartialPerm::idempotent(4, &set(&[1, 4]))),
            Err(Error::NotInMonoid(_))
        ));
    }

    #[test]
    fn nilpotent_example_has_length_three() {
        let c = sym(2);
        let r: PartialPerm = "0,3,0,0".parse().unwrap();
        let nf = c.normal_form(&r).unwrap();
        assert_eq!(nf.rank, Some(1));
        assert_eq!(nf.length, 3);
        assert_eq!(nf.w1.compose(&nf.e).compose(&nf.w2), r);
    }

    /// For every element the triple is unique among all pairs with the minimality conditions.
    #[test]
    fn normal_form_unique_exhaustive() {
        for c in [sym(2), MonoidContext::new(MonoidKind::Rook, 3)] {
            for r in c.elements() {
                let nf = c.normal_form(r).unwrap();
                assert_eq!(nf.w1.compose(&nf.e).compose(&nf.w2), *r);
                if r.is_unit() {
                    continue;
                }
                let e = &nf.e;
                let centralizer: Vec<_> =
                    c.units().iter().filter(|w| w.compose(e) == e.compose(w)).collect();
                let fixing: Vec<_> =
                    centralizer.iter().filter(|w| w.compose(e) == *e).collect();
                let len = |w: &PartialPerm| c.coxeter_length(w).unwrap();
                let mut found = Vec::new();
                for w1 in c.units() {
                    if fixing.iter().any(|x| len(&w1.compose(x)) < len(w1)) {
                        continue;
                    }
                    for w2 in c.units() {
                        if centralizer.iter().any(|x| len(&x.compose(w2)) < len(w2)) {
                            continue;
                        }
                        if w1.compose(e).compose(w2) == *r {
                            found.push((w1.clone(), w2.clone()));
                        }
                    }
                }
                assert_eq!(found, vec![(nf.w1.clone(), nf.w2.clone())], "{r}");
            }
        }
    }

    #[test]
    fn lengths_add_along_normal_form() {
        let c = sym(2);
        for r in c.elements() {
            let nf = c.normal_form(r).unwrap();
            assert_eq!(nf.length, c.coxeter_length(&nf.w1).unwrap() + c.coxeter_length(&nf.w2).unwrap());
        }
    }
}
