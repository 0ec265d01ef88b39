//! Arithmetic in the generic Hecke algebra `H(R)` on the basis `{T_r}` and reduction of
//! arbitrary basis elements to standard elements modulo commutators.

use std::cell::RefCell;
use std::collections::{BTreeMap, BTreeSet, HashMap, HashSet, VecDeque};
use std::fmt;
use std::sync::OnceLock;

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::error::{Error, Result};
use crate::matrix::LabeledMatrix;
use crate::monoid::{MonoidContext, NormalForm, PartialPerm};
use crate::partition::MunnIndex;
use crate::qpoly::QRat;
use crate::solomon::llc_character_oracle;

use super::tables::hecke_monoid_table;

/// A left factor in the defining relations: a simple reflection or a cross-section idempotent.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Generator {
    /// Index into `MonoidContext::generators`.
    Reflection(usize),
    /// The cross-section idempotent of the given rank.
    Idempotent(usize),
}

/// Sparse linear combination of basis elements `T_r`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct HeckeElement {
    terms: BTreeMap<PartialPerm, QRat>,
}

impl HeckeElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn basis(r: PartialPerm) -> Self {
        Self::term(r, QRat::one())
    }

    pub fn term(r: PartialPerm, c: QRat) -> Self {
        let mut h = Self::zero();
        h.add_term(r, c);
        h
    }

    pub fn add_term(&mut self, r: PartialPerm, c: QRat) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(r).or_default();
        *slot = &*slot + &c;
        if slot.is_zero() {
            let k = self.terms.iter().find(|(_, v)| v.is_zero()).map(|(k, _)| k.clone()).unwrap();
            self.terms.remove(&k);
        }
    }

    pub fn add(&mut self, other: &HeckeElement, scale: &QRat) {
        for (r, c) in &other.terms {
            self.add_term(r.clone(), scale * c);
        }
    }

    pub fn terms(&self) -> &BTreeMap<PartialPerm, QRat> {
        &self.terms
    }

    pub fn coefficient(&self, r: &PartialPerm) -> QRat {
        self.terms.get(r).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl fmt::Display for HeckeElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.terms.iter().map(|(r, c)| format!("({c})T{r}")).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// Coefficients `c_{r,λ}` with `T_r ≡ Σ c_{r,λ} T_λ`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ReductionResult {
    pub coefficients: BTreeMap<MunnIndex, QRat>,
}

impl ReductionResult {
    fn indicator(label: MunnIndex) -> Self {
        ReductionResult { coefficients: BTreeMap::from([(label, QRat::one())]) }
    }

    fn add(&mut self, other: &ReductionResult, scale: &QRat) {
        for (l, c) in &other.coefficients {
            let slot = self.coefficients.entry(l.clone()).or_default();
            *slot = &*slot + &(scale * c);
        }
        self.coefficients.retain(|_, v| !v.is_zero());
    }

    pub fn get(&self, label: &MunnIndex) -> QRat {
        self.coefficients.get(label).cloned().unwrap_or_default()
    }

    /// `Σ_μ c_μ · table[μ][λ]` for a table whose rows are standard elements.
    pub fn evaluate(&self, table: &LabeledMatrix<QRat>, lambda: &MunnIndex) -> Result<QRat> {
        let j = table.col_index(lambda).ok_or_else(|| Error::UnknownLabel(lambda.to_string()))?;
        let mut acc = QRat::zero();
        for (mu, c) in &self.coefficients {
            let i = table.row_index(mu).ok_or_else(|| Error::UnknownLabel(mu.to_string()))?;
            acc = &acc + &(c * &table.entries[i][j]);
        }
        Ok(acc)
    }
}

/// One line of a consistency report: the specialized reduction against the oracle.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConsistencyEntry {
    pub character: MunnIndex,
    pub reduced: BigRational,
    pub oracle: i64,
}

impl ConsistencyEntry {
    pub fn ok(&self) -> bool {
        self.reduced == BigRational::from_integer(BigInt::from(self.oracle))
    }
}

/// Hecke algebra arithmetic over a fixed monoid, with memoized normal forms and reductions.
pub struct Rewriter<'a> {
    ctx: &'a MonoidContext,
    forms: RefCell<HashMap<PartialPerm, NormalForm>>,
    memo: RefCell<HashMap<PartialPerm, ReductionResult>>,
    mq: OnceLock<LabeledMatrix<QRat>>,
}

impl<'a> Rewriter<'a> {
    pub fn new(ctx: &'a MonoidContext) -> Self {
        Rewriter { ctx, forms: RefCell::default(), memo: RefCell::default(), mq: OnceLock::new() }
    }

    pub fn context(&self) -> &MonoidContext {
        self.ctx
    }

    pub fn normal_form(&self, r: &PartialPerm) -> Result<NormalForm> {
        if let Some(nf) = self.forms.borrow().get(r) {
            return Ok(nf.clone());
        }
        let nf = self.ctx.normal_form(r)?;
        self.forms.borrow_mut().insert(r.clone(), nf.clone());
        Ok(nf)
    }

    pub fn length(&self, r: &PartialPerm) -> Result<usize> {
        Ok(self.normal_form(r)?.length)
    }

    /// `T_x · T_r` by the defining relations.
    fn mul_generator_basis(&self, x: Generator, r: &PartialPerm, c: &QRat, out: &mut HeckeElement) -> Result<()> {
        let lr = self.length(r)? as i64;
        match x {
            Generator::Reflection(i) => {
                let xr = self.ctx.generators[i].compose(r);
                let lxr = self.length(&xr)? as i64;
                match lxr - lr {
                    1 => out.add_term(xr, c.clone()),
                    0 => out.add_term(r.clone(), c * &QRat::q()),
                    -1 => {
                        out.add_term(r.clone(), c * &(&QRat::q() - &QRat::one()));
                        out.add_term(xr, c * &QRat::q());
                    }
                    d => {
                        return Err(Error::DefinitionMismatch(format!(
                            "length jumps by {d} from {r} under generator {i}"
                        )))
                    }
                }
            }
            Generator::Idempotent(t) => {
                let xr = self.ctx.idempotent(t).compose(r);
                let lxr = self.length(&xr)? as i64;
                out.add_term(xr, c * &QRat::q_pow(lr - lxr));
            }
        }
        Ok(())
    }

    pub fn left_mul_generator(&self, x: Generator, h: &HeckeElement) -> Result<HeckeElement> {
        let mut out = HeckeElement::zero();
        for (r, c) in &h.terms {
            self.mul_generator_basis(x, r, c, &mut out)?;
        }
        Ok(out)
    }

    /// The factorization `T_r = T_{w1} T_e T_{w2}` as a word of generators, leftmost first.
    pub fn factor(&self, r: &PartialPerm) -> Result<Vec<Generator>> {
        let nf = self.normal_form(r)?;
        let mut word: Vec<Generator> =
            self.ctx.reduced_word(&nf.w1).unwrap().iter().map(|&i| Generator::Reflection(i)).collect();
        if let Some(t) = nf.rank {
            word.push(Generator::Idempotent(t));
            word.extend(self.ctx.reduced_word(&nf.w2).unwrap().iter().map(|&i| Generator::Reflection(i)));
        }
        Ok(word)
    }

    /// `T_{x_1} ⋯ T_{x_k} · h`.
    pub fn apply_word(&self, word: &[Generator], h: &HeckeElement) -> Result<HeckeElement> {
        word.iter().rev().try_fold(h.clone(), |acc, &x| self.left_mul_generator(x, &acc))
    }

    /// Product of a word of generators, as an element of the basis expansion.
    pub fn word_element(&self, word: &[Generator]) -> Result<HeckeElement> {
        self.apply_word(word, &HeckeElement::basis(self.ctx.identity()))
    }

    pub fn multiply(&self, h1: &HeckeElement, h2: &HeckeElement) -> Result<HeckeElement> {
        let mut out = HeckeElement::zero();
        for (r, c) in &h1.terms {
            let part = self.apply_word(&self.factor(r)?, h2)?;
            out.add(&part, c);
        }
        Ok(out)
    }

    fn basis_product(&self, a: &PartialPerm, b: &PartialPerm) -> Result<HeckeElement> {
        self.multiply(&HeckeElement::basis(a.clone()), &HeckeElement::basis(b.clone()))
    }

    /// `T_r ≡ Σ c_{r,λ} T_λ`, deterministic and memoized.
    pub fn reduce_to_standard(&self, r: &PartialPerm) -> Result<ReductionResult> {
        if let Some(v) = self.memo.borrow().get(r) {
            return Ok(v.clone());
        }
        let nf = self.normal_form(r)?;
        let result = match nf.rank {
            None => self.reduce_local(r, None)?,
            Some(t) if self.ctx.local_class(r).is_some() => self.reduce_local(r, Some(t))?,
            Some(_) => {
                // T_{w1} T_e T_{w2} ≡ T_e T_{w2} T_{w1} = T_e T_e T_{w2} T_{w1} ≡ T_e T_{w2} T_{w1} T_e
                let e = HeckeElement::basis(nf.e.clone());
                let inner = self.basis_product(&nf.w2, &nf.w1)?;
                let h = self.multiply(&self.multiply(&e, &inner)?, &e)?;
                let mut acc = ReductionResult::default();
                for (y, c) in &h.terms {
                    if y == r {
                        return Err(Error::DefinitionMismatch(format!("reduction of {r} does not progress")));
                    }
                    acc.add(&self.reduce_to_standard(y)?, c);
                }
                acc
            }
        };
        self.memo.borrow_mut().insert(r.clone(), result.clone());
        Ok(result)
    }

    /// Reduction inside the group `W_e` of units of `e·R·e` (or `W` itself when `rank` is
    /// `None`): strong conjugations at constant length, then a length-decreasing rotation.
    fn reduce_local(&self, y: &PartialPerm, rank: Option<usize>) -> Result<ReductionResult> {
        let label = self.ctx.local_class(y).expect("element of a local group");
        let standard = self.ctx.class_representative(&label);
        let k: BTreeSet<usize> = match rank {
            Some(t) => self.ctx.cross_section_set(t),
            None => (1..=self.ctx.degree()).collect(),
        };
        let gens: Vec<usize> = (0..self.ctx.generators.len())
            .filter(|&i| {
                let g = &self.ctx.generators[i];
                g.image_of(&k) == k && k.iter().any(|&x| g.apply(x) != x)
            })
            .collect();
        let stabilizer: Vec<PartialPerm> = match rank {
            Some(t) => self.ctx.stabilizer(t),
            None => self.ctx.units().to_vec(),
        };
        let l0 = self.length(y)?;
        let mut seen = HashSet::from([y.clone()]);
        let mut queue = VecDeque::from([y.clone()]);
        while let Some(z) = queue.pop_front() {
            if z == standard {
                return Ok(ReductionResult::indicator(label));
            }
            for &i in &gens {
                let s = &self.ctx.generators[i];
                let szs = s.compose(&z).compose(s);
                let l = self.length(&szs)?;
                if l < l0 {
                    // T_z = T_s T_{sz} ≡ T_{sz} T_s
                    let sz = s.compose(&z);
                    let h = self.basis_product(&sz, s)?;
                    let mut acc = ReductionResult::default();
                    for (x, c) in &h.terms {
                        if self.length(x)? >= l0 {
                            return Err(Error::DefinitionMismatch(format!("rotation of {z} does not shorten")));
                        }
                        acc.add(&self.reduce_to_standard(x)?, c);
                    }
                    return Ok(acc);
                }
                if l == l0 && seen.insert(szs.clone()) {
                    queue.push_back(szs);
                }
            }
            // strong conjugation z' = x⁻¹ z x with T_z T_x = T_{zx} = T_x T_{z'}
            for x in &stabilizer {
                let z2 = x.inverse().compose(&z).compose(x);
                if seen.contains(&z2) || self.length(&z2)? != l0 {
                    continue;
                }
                let zx = HeckeElement::basis(z.compose(x));
                if self.basis_product(&z, x)? == zx && self.basis_product(x, &z2)? == zx {
                    seen.insert(z2.clone());
                    queue.push_back(z2);
                }
            }
        }
        Err(Error::DefinitionMismatch(format!("no reduction path from {y} to a standard element")))
    }

    /// Character table `M_q`, computed on first use.
    pub fn hecke_table(&self) -> Result<&LabeledMatrix<QRat>> {
        if let Some(m) = self.mq.get() {
            return Ok(m);
        }
        let m = hecke_monoid_table(self.ctx.kind, self.ctx.n)?.matrix;
        Ok(self.mq.get_or_init(|| m))
    }

    /// `χ*_λ(T_r) = Σ_μ c_{r,μ} (M_q)_{μλ}`.
    pub fn character_value_at(&self, r: &PartialPerm, lambda: &MunnIndex) -> Result<QRat> {
        self.reduce_to_standard(r)?.evaluate(self.hecke_table()?, lambda)
    }

    /// Specializes the reduction of `r` at `q = 1` and compares with the direct
    /// character values of the monoid, for every irreducible character.
    pub fn consistency_report(&self, r: &PartialPerm) -> Result<Vec<ConsistencyEntry>> {
        let red = self.reduce_to_standard(r)?;
        let m = crate::solomon::monoid_table(self.ctx.kind, self.ctx.n)?.m;
        let one = BigRational::from_integer(BigInt::from(1));
        let mut out = Vec::new();
        for lambda in m.cols.clone() {
            let j = m.col_index(&lambda).unwrap();
            let mut acc = BigRational::from_integer(BigInt::from(0));
            for (mu, c) in &red.coefficients {
                let i = m.row_index(mu).ok_or_else(|| Error::UnknownLabel(mu.to_string()))?;
                acc += c.specialize(&one)? * BigRational::from_integer(BigInt::from(m.entries[i][j]));
            }
            let oracle = llc_character_oracle(&lambda, r, self.ctx);
            out.push(ConsistencyEntry { character: lambda, reduced: acc, oracle });
        }
        Ok(out)
    }
}
