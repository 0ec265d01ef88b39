//! Seminormal matrix representations of the Iwahori–Hecke algebras of type A and of
//! type B with equal parameters, over `Q(q)` with `(T - q)(T + 1) = 0`.

use std::collections::HashMap;

use crate::partition::Partition;
use crate::qpoly::QRat;

pub type Mat = Vec<Vec<QRat>>;

/// Type of the Coxeter system the representation is built for.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HeckeType {
    /// Generators `T_1..T_{n-1}`.
    A,
    /// Generators `T_0, T_1..T_{n-1}`.
    B,
}

/// Position `(component, row, column)` of each entry `1..n` of a standard (bi)tableau.
type Tableau = Vec<(usize, usize, usize)>;

fn standard_tableaux(shape: &[Partition]) -> Vec<Tableau> {
    let n: usize = shape.iter().map(|p| p.size()).sum();
    let mut filled: Vec<Vec<usize>> = shape.iter().map(|p| vec![0; p.len()]).collect();
    let mut out = Vec::new();
    fn rec(k: usize, n: usize, shape: &[Partition], filled: &mut Vec<Vec<usize>>, cur: &mut Tableau, out: &mut Vec<Tableau>) {
        if k == n {
            out.push(cur.clone());
            return;
        }
        for c in 0..shape.len() {
            for r in 0..shape[c].len() {
                let col = filled[c][r];
                let fits = col < shape[c].part(r) && (r == 0 || filled[c][r - 1] > col);
                if fits {
                    filled[c][r] += 1;
                    cur.push((c, r, col));
                    rec(k + 1, n, shape, filled, cur, out);
                    cur.pop();
                    filled[c][r] -= 1;
                }
            }
        }
    }
    rec(0, n, shape, &mut filled, &mut Vec::new(), &mut out);
    out
}

fn inversions(t: &Tableau) -> usize {
    let mut c = 0;
    for i in 0..t.len() {
        for j in i + 1..t.len() {
            if (t[i].0, t[i].1) > (t[j].0, t[j].1) {
                c += 1;
            }
        }
    }
    c
}

/// An irreducible representation given by one matrix per generator.
#[derive(Clone, Debug)]
pub struct Representation {
    pub kind: HeckeType,
    pub dim: usize,
    pub generators: Vec<Mat>,
}

impl Representation {
    /// Irreducible indexed by the partition `shape` (type A, one component) or the
    /// bipartition `(γ, δ)` (type B, two components).
    pub fn new(kind: HeckeType, shape: &[Partition]) -> Self {
        assert_eq!(shape.len(), if kind == HeckeType::A { 1 } else { 2 });
        let n: usize = shape.iter().map(|p| p.size()).sum();
        let basis = standard_tableaux(shape);
        let index: HashMap<Tableau, usize> = basis.iter().cloned().enumerate().map(|(i, t)| (t, i)).collect();
        let dim = basis.len();
        let q = QRat::q();
        // Jucys–Murphy eigenvalues
        let eig = |&(c, r, col): &(usize, usize, usize)| -> QRat {
            let content = col as i64 - r as i64;
            match (kind, c) {
                (HeckeType::A, _) => QRat::q_pow(content),
                (HeckeType::B, 0) => QRat::q_pow(content + 1),
                (HeckeType::B, _) => -QRat::q_pow(content),
            }
        };
        let zero_mat = || vec![vec![QRat::zero(); dim]; dim];
        let mut generators = Vec::new();
        if kind == HeckeType::B {
            let mut t0 = zero_mat();
            for (j, t) in basis.iter().enumerate() {
                t0[j][j] = if t[0].0 == 0 { q.clone() } else { QRat::from_int(-1) };
            }
            generators.push(t0);
        }
        for i in 0..n.saturating_sub(1) {
            let mut m = zero_mat();
            for (j, t) in basis.iter().enumerate() {
                let (a, b) = (t[i], t[i + 1]);
                if a.0 == b.0 && a.1 == b.1 {
                    m[j][j] = q.clone();
                } else if a.0 == b.0 && a.2 == b.2 {
                    m[j][j] = QRat::from_int(-1);
                } else {
                    let rho = eig(&b).checked_div(&eig(&a)).unwrap();
                    let diag = |r: &QRat| (&(&q - &QRat::one()) * r).checked_div(&(r - &QRat::one())).unwrap();
                    let d = diag(&rho);
                    let d_other = diag(&rho.inv().unwrap());
                    let mut s = t.clone();
                    s.swap(i, i + 1);
                    let k = index[&s];
                    m[j][j] = d.clone();
                    m[k][j] = if inversions(&s) > inversions(t) {
                        QRat::one()
                    } else {
                        &(&d * &d_other) + &q
                    };
                }
            }
            generators.push(m);
        }
        Representation { kind, dim, generators }
    }

    pub fn identity(&self) -> Mat {
        (0..self.dim)
            .map(|i| (0..self.dim).map(|j| if i == j { QRat::one() } else { QRat::zero() }).collect())
            .collect()
    }

    /// Matrix of `T_{x_1} ⋯ T_{x_k}` for a word of generator indices.
    pub fn word(&self, word: &[usize]) -> Mat {
        word.iter().fold(self.identity(), |acc, &g| mat_mul(&acc, &self.generators[g]))
    }

    pub fn trace_of_word(&self, word: &[usize]) -> QRat {
        trace(&self.word(word))
    }
}

pub fn mat_mul(a: &Mat, b: &Mat) -> Mat {
    let n = a.len();
    let m = b.first().map_or(0, |r| r.len());
    let mut out = vec![vec![QRat::zero(); m]; n];
    for i in 0..n {
        for (k, bk) in b.iter().enumerate() {
            if a[i][k].is_zero() {
                continue;
            }
            for j in 0..m {
                if !bk[j].is_zero() {
                    out[i][j] = &out[i][j] + &(&a[i][k] * &bk[j]);
                }
            }
        }
    }
    out
}

pub fn trace(a: &Mat) -> QRat {
    (0..a.len()).fold(QRat::zero(), |acc, i| &acc + &a[i][i])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::{enumerate_bipartitions, enumerate_partitions};

    fn check_relations(rep: &Representation) {
        let g = &rep.generators;
        let q = QRat::q();
        let id = rep.identity();
        for (i, x) in g.iter().enumerate() {
            // (T - q)(T + 1) = 0, i.e. T² = (q-1)T + q
            let lhs = mat_mul(x, x);
            let rhs: Mat = (0..rep.dim)
                .map(|r| (0..rep.dim).map(|c| &(&(&q - &QRat::one()) * &x[r][c]) + &(&q * &id[r][c])).collect())
                .collect();
            assert_eq!(lhs, rhs, "quadratic relation, generator {i}");
            for j in i + 1..g.len() {
                let m = match (rep.kind, i, j) {
                    (HeckeType::B, 0, 1) => 4,
                    _ if j == i + 1 => 3,
                    _ => 2,
                };
                let word_x: Vec<usize> = (0..m).map(|k| if k % 2 == 0 { i } else { j }).collect();
                let word_y: Vec<usize> = (0..m).map(|k| if k % 2 == 0 { j } else { i }).collect();
                assert_eq!(rep.word(&word_x), rep.word(&word_y), "braid {i} {j}");
            }
        }
    }

    #[test]
    fn type_a_relations_and_dimensions() {
        for t in 1..=5 {
            let mut total = 0;
            for l in enumerate_partitions(t) {
                let rep = Representation::new(HeckeType::A, &[l]);
                check_relations(&rep);
                total += rep.dim * rep.dim;
            }
            assert_eq!(total, (1..=t).product::<usize>());
        }
    }

    #[test]
    fn type_b_relations_and_dimensions() {
        for n in 1..=3 {
            let mut total = 0;
            for b in enumerate_bipartitions(n) {
                let rep = Representation::new(HeckeType::B, &[b.positive, b.negative]);
                check_relations(&rep);
                total += rep.dim * rep.dim;
            }
            assert_eq!(total, (1..=n).product::<usize>() << n);
        }
    }

    #[test]
    fn one_dimensional_values() {
        let triv = Representation::new(HeckeType::A, &[Partition::new(vec![3])]);
        assert_eq!(triv.trace_of_word(&[0, 1]), QRat::q_pow(2));
        let sign = Representation::new(HeckeType::A, &[Partition::new(vec![1, 1, 1])]);
        assert_eq!(sign.trace_of_word(&[0, 1]), QRat::one());
    }
}
