//! Character tables of the group Hecke algebras, `M_q = Y_q·B`, `A_q = M_q·Y_q⁻¹`,
//! Starkey's rule and the transition coefficients between `M` and `M_q`.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::error::{Error, Result};
use crate::group_tables::mn_character;
use crate::matrix::{to_qrat, LabeledMatrix};
use crate::monoid::{all_perms, MonoidContext};
use crate::partition::{
    enumerate_bipartitions, enumerate_partitions, enumerate_qn, MonoidKind, MunnIndex, Partition,
};
use crate::qpoly::{QPoly, QRat};
use crate::solomon::{b_matrix, monoid_table};

use super::seminormal::{HeckeType, Representation};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Provenance {
    Seminormal,
    Starkey,
    Product,
}

#[derive(Clone, Debug, PartialEq)]
pub struct HeckeTable {
    pub matrix: LabeledMatrix<QRat>,
    pub provenance: Provenance,
}

impl HeckeTable {
    /// Fails unless every entry is a polynomial with integer coefficients.
    pub fn check_integral(&self) -> Result<()> {
        let m = &self.matrix;
        for i in 0..m.nrows() {
            for j in 0..m.ncols() {
                let v = &m.entries[i][j];
                if !v.as_poly().is_some_and(|p| p.has_integer_coeffs()) {
                    return Err(Error::NonPolynomialEntry {
                        row: m.rows[i].to_string(),
                        col: m.cols[j].to_string(),
                        value: v.to_string(),
                    });
                }
            }
        }
        Ok(())
    }

    pub fn specialize(&self, value: i64) -> Result<LabeledMatrix<BigRational>> {
        let x = BigRational::from_integer(BigInt::from(value));
        self.matrix.try_map(|v| v.specialize(&x))
    }
}

/// Word in `T_1..T_{t-1}` (indices from 0) of the class representative of cycle type
/// `μ`: contiguous increasing cycles, largest part first.
pub fn symmetric_class_word(mu: &Partition) -> Vec<usize> {
    let mut word = Vec::new();
    let mut a = 0;
    for &p in mu.parts() {
        word.extend(a..a + p - 1);
        a += p;
    }
    word
}

pub fn hecke_symmetric_table(t: usize) -> Result<HeckeTable> {
    let labels: Vec<MunnIndex> = enumerate_partitions(t).into_iter().map(MunnIndex::Part).collect();
    let reps: BTreeMap<MunnIndex, Representation> = labels
        .iter()
        .map(|l| match l {
            MunnIndex::Part(p) => (l.clone(), Representation::new(HeckeType::A, std::slice::from_ref(p))),
            _ => unreachable!(),
        })
        .collect();
    let matrix = LabeledMatrix::from_fn(labels.clone(), labels, |cls, chr| match cls {
        MunnIndex::Part(mu) => reps[chr].trace_of_word(&symmetric_class_word(mu)),
        _ => unreachable!(),
    });
    let table = HeckeTable { matrix, provenance: Provenance::Seminormal };
    table.check_integral()?;
    Ok(table)
}

pub fn hecke_hyperoctahedral_table(n: usize) -> Result<HeckeTable> {
    let ctx = MonoidContext::new(MonoidKind::Symplectic, n);
    let labels: Vec<MunnIndex> = enumerate_bipartitions(n).into_iter().map(MunnIndex::Bip).collect();
    let reps: BTreeMap<MunnIndex, Representation> = labels
        .iter()
        .map(|l| match l {
            MunnIndex::Bip(b) => {
                (l.clone(), Representation::new(HeckeType::B, &[b.positive.clone(), b.negative.clone()]))
            }
            _ => unreachable!(),
        })
        .collect();
    let matrix = LabeledMatrix::from_fn(labels.clone(), labels, |cls, chr| match cls {
        MunnIndex::Bip(b) => reps[chr].trace_of_word(&ctx.bip_representative_word(b)),
        _ => unreachable!(),
    });
    let table = HeckeTable { matrix, provenance: Provenance::Seminormal };
    table.check_integral()?;
    Ok(table)
}

/// Block-diagonal `Y_q` in `Q_n` order.
pub fn assemble_yq(kind: MonoidKind, n: usize) -> Result<HeckeTable> {
    let order = enumerate_qn(kind, n);
    let mut y = LabeledMatrix::zeros(order.labels.clone(), order.labels.clone());
    let mut blocks = Vec::new();
    if kind == MonoidKind::Symplectic {
        blocks.push(hecke_hyperoctahedral_table(n)?);
    }
    for t in (0..=n).rev() {
        blocks.push(hecke_symmetric_table(t)?);
    }
    let mut off = 0;
    for b in blocks {
        for i in 0..b.matrix.nrows() {
            for j in 0..b.matrix.ncols() {
                y.entries[off + i][off + j] = b.matrix.entries[i][j].clone();
            }
        }
        off += b.matrix.nrows();
    }
    Ok(HeckeTable { matrix: y, provenance: Provenance::Seminormal })
}

pub fn hecke_monoid_table(kind: MonoidKind, n: usize) -> Result<HeckeTable> {
    let yq = assemble_yq(kind, n)?;
    let b = to_qrat(&b_matrix(kind, n));
    let table = HeckeTable { matrix: yq.matrix.mul(&b), provenance: Provenance::Product };
    table.check_integral()?;
    Ok(table)
}

pub fn hecke_a_matrix(kind: MonoidKind, n: usize) -> Result<HeckeTable> {
    let mq = hecke_monoid_table(kind, n)?;
    let yq = assemble_yq(kind, n)?;
    let mut a = mq.matrix.mul(&yq.matrix.inverse()?);
    // the inverse carries character labels on its rows; the product is class-indexed
    a.cols = mq.matrix.rows.clone();
    Ok(HeckeTable { matrix: a, provenance: Provenance::Product })
}

/// All permutations of `{1..t}` in the Young subgroup `S_μ` (blocks of consecutive points).
fn young_subgroup(mu: &Partition) -> Vec<crate::monoid::PartialPerm> {
    let t = mu.size();
    let mut block = vec![0; t + 1];
    let mut a = 1;
    for (bi, &p) in mu.parts().iter().enumerate() {
        for x in a..a + p {
            block[x] = bi;
        }
        a += p;
    }
    all_perms(t).into_iter().filter(|w| (1..=t).all(|i| block[w.apply(i)] == block[i])).collect()
}

/// `det(q·1 − ρ_μ(w))` for the reflection representation of `S_μ`: per block,
/// `∏_cycles (q^|c| − 1) / (q − 1)`.
fn reflection_charpoly(mu: &Partition, w: &crate::monoid::PartialPerm) -> QRat {
    let qm1 = QPoly::from_int_coeffs(&[-1, 1]);
    let mut acc = QRat::one();
    let mut a = 1;
    for &p in mu.parts() {
        let k: std::collections::BTreeSet<usize> = (a..a + p).collect();
        let ty = w.restricted_cycle_type(&k).unwrap();
        let mut num = QPoly::one();
        for &c in ty.parts() {
            num = &num * &(&QPoly::q().pow(c as u32) - &QPoly::one());
        }
        acc = &acc * &QRat::new(num, qm1.clone()).unwrap();
        a += p;
    }
    acc
}

/// Starkey weight `Σ_{w ∈ S_μ ∩ C_γ} det(q − ρ_μ(w)) / |S_μ|`.
pub fn starkey_weight(mu: &Partition, gamma: &Partition) -> QRat {
    let g = young_subgroup(mu);
    let size = QRat::from_int(g.len() as i64);
    let k: std::collections::BTreeSet<usize> = (1..=mu.size()).collect();
    g.iter()
        .filter(|w| w.restricted_cycle_type(&k).unwrap() == *gamma)
        .fold(QRat::zero(), |acc, w| &acc + &reflection_charpoly(mu, w))
        .checked_div(&size)
        .unwrap()
}

/// `χ*_λ(T_{w_μ})` by Starkey's rule.
pub fn starkey_value(lambda: &Partition, mu: &Partition) -> QRat {
    let g = young_subgroup(mu);
    let k: std::collections::BTreeSet<usize> = (1..=mu.size()).collect();
    g.iter()
        .fold(QRat::zero(), |acc, w| {
            let chi = mn_character(lambda, &w.restricted_cycle_type(&k).unwrap());
            &acc + &(&QRat::from_int(chi) * &reflection_charpoly(mu, w))
        })
        .checked_div(&QRat::from_int(g.len() as i64))
        .unwrap()
}

pub fn starkey_table(t: usize) -> HeckeTable {
    let labels: Vec<MunnIndex> = enumerate_partitions(t).into_iter().map(MunnIndex::Part).collect();
    let matrix = LabeledMatrix::from_fn(labels.clone(), labels, |cls, chr| match (cls, chr) {
        (MunnIndex::Part(mu), MunnIndex::Part(la)) => starkey_value(la, mu),
        _ => unreachable!(),
    });
    HeckeTable { matrix, provenance: Provenance::Starkey }
}

/// Coefficients `p_μ^γ` with `χ*_λ(T_μ) = Σ_γ p_μ^γ χ_λ(r_γ)` for every `λ`.
#[derive(Clone, Debug, PartialEq)]
pub struct TransitionCoefficients {
    pub coefficients: BTreeMap<MunnIndex, BTreeMap<MunnIndex, QRat>>,
}

impl TransitionCoefficients {
    pub fn get(&self, mu: &MunnIndex, gamma: &MunnIndex) -> QRat {
        self.coefficients.get(mu).and_then(|m| m.get(gamma)).cloned().unwrap_or_default()
    }

    /// Positions in rank blocks where the solved coefficient differs from the Starkey weight.
    pub fn starkey_mismatches(&self) -> Vec<(MunnIndex, MunnIndex)> {
        let mut out = Vec::new();
        for (mu, row) in &self.coefficients {
            let MunnIndex::Part(m) = mu else { continue };
            for g in enumerate_partitions(m.size()) {
                let gamma = MunnIndex::Part(g.clone());
                let solved = row.get(&gamma).cloned().unwrap_or_default();
                if solved != starkey_weight(m, &g) {
                    out.push((mu.clone(), gamma));
                }
            }
        }
        out
    }
}

/// Solves `M_q = P·M` row by row and checks that `P` is block diagonal.
pub fn transition_coefficients(kind: MonoidKind, n: usize) -> Result<TransitionCoefficients> {
    let m = to_qrat(&monoid_table(kind, n)?.m);
    let mq = hecke_monoid_table(kind, n)?.matrix;
    let p = mq.mul(&m.inverse()?);
    let mut coefficients = BTreeMap::new();
    for (i, mu) in mq.rows.iter().enumerate() {
        let mut row = BTreeMap::new();
        for (j, gamma) in m.rows.iter().enumerate() {
            let v = &p.entries[i][j];
            if v.is_zero() {
                continue;
            }
            if !mu.same_block(gamma) {
                return Err(Error::SupportViolation { class: mu.to_string(), label: gamma.to_string() });
            }
            row.insert(gamma.clone(), v.clone());
        }
        coefficients.insert(mu.clone(), row);
    }
    Ok(TransitionCoefficients { coefficients })
}
