//! Dense matrices whose rows and columns carry Munn-class labels.

use std::fmt::Display;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::partition::MunnIndex;
use crate::qpoly::QRat;

/// Exact commutative ring elements usable as matrix entries.
pub trait Scalar: Clone + PartialEq + Display + FromStr {
    fn zero() -> Self;
    fn one() -> Self;
    fn add(&self, o: &Self) -> Self;
    fn sub(&self, o: &Self) -> Self;
    fn mul(&self, o: &Self) -> Self;
    fn is_zero(&self) -> bool {
        *self == Self::zero()
    }
}

pub trait Field: Scalar {
    /// `None` when dividing by zero.
    fn div(&self, o: &Self) -> Option<Self>;
}

impl Scalar for i64 {
    fn zero() -> Self {
        0
    }
    fn one() -> Self {
        1
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
}

impl Scalar for BigRational {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
}

impl Field for BigRational {
    fn div(&self, o: &Self) -> Option<Self> {
        (!Zero::is_zero(o)).then(|| self / o)
    }
}

impl Scalar for QRat {
    fn zero() -> Self {
        QRat::zero()
    }
    fn one() -> Self {
        QRat::one()
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn is_zero(&self) -> bool {
        QRat::is_zero(self)
    }
}

impl Field for QRat {
    fn div(&self, o: &Self) -> Option<Self> {
        self.checked_div(o).ok()
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct LabeledMatrix<T> {
    pub rows: Vec<MunnIndex>,
    pub cols: Vec<MunnIndex>,
    pub entries: Vec<Vec<T>>,
}

impl<T: Scalar> LabeledMatrix<T> {
    pub fn zeros(rows: Vec<MunnIndex>, cols: Vec<MunnIndex>) -> Self {
        let entries = vec![vec![T::zero(); cols.len()]; rows.len()];
        LabeledMatrix { rows, cols, entries }
    }

    pub fn identity(labels: Vec<MunnIndex>) -> Self {
        let mut m = Self::zeros(labels.clone(), labels);
        for i in 0..m.rows.len() {
            m.entries[i][i] = T::one();
        }
        m
    }

    pub fn from_fn(
        rows: Vec<MunnIndex>,
        cols: Vec<MunnIndex>,
        mut f: impl FnMut(&MunnIndex, &MunnIndex) -> T,
    ) -> Self {
        let entries = rows.iter().map(|r| cols.iter().map(|c| f(r, c)).collect()).collect();
        LabeledMatrix { rows, cols, entries }
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.cols.len()
    }

    pub fn get(&self, i: usize, j: usize) -> &T {
        &self.entries[i][j]
    }

    pub fn row_index(&self, label: &MunnIndex) -> Option<usize> {
        self.rows.iter().position(|l| l == label)
    }

    pub fn col_index(&self, label: &MunnIndex) -> Option<usize> {
        self.cols.iter().position(|l| l == label)
    }

    pub fn at(&self, row: &MunnIndex, col: &MunnIndex) -> Option<&T> {
        Some(&self.entries[self.row_index(row)?][self.col_index(col)?])
    }

    pub fn transpose(&self) -> Self {
        LabeledMatrix {
            rows: self.cols.clone(),
            cols: self.rows.clone(),
            entries: (0..self.ncols())
                .map(|j| (0..self.nrows()).map(|i| self.entries[i][j].clone()).collect())
                .collect(),
        }
    }

    /// Ordinary product; inner dimensions must agree (labels are not checked).
    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.ncols(), other.nrows(), "dimension mismatch");
        let mut out = Self::zeros(self.rows.clone(), other.cols.clone());
        for i in 0..self.nrows() {
            for k in 0..self.ncols() {
                let a = &self.entries[i][k];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.ncols() {
                    let b = &other.entries[k][j];
                    if !b.is_zero() {
                        out.entries[i][j] = out.entries[i][j].add(&a.mul(b));
                    }
                }
            }
        }
        out
    }

    pub fn map<U>(&self, mut f: impl FnMut(&T) -> U) -> LabeledMatrix<U> {
        LabeledMatrix {
            rows: self.rows.clone(),
            cols: self.cols.clone(),
            entries: self.entries.iter().map(|r| r.iter().map(&mut f).collect()).collect(),
        }
    }

    pub fn try_map<U>(&self, mut f: impl FnMut(&T) -> Result<U>) -> Result<LabeledMatrix<U>> {
        let entries = self
            .entries
            .iter()
            .map(|r| r.iter().map(&mut f).collect::<Result<Vec<U>>>())
            .collect::<Result<Vec<_>>>()?;
        Ok(LabeledMatrix { rows: self.rows.clone(), cols: self.cols.clone(), entries })
    }

    /// Copy with rows and columns permuted into the given label orders.
    pub fn reindexed(&self, rows: &[MunnIndex], cols: &[MunnIndex]) -> Result<Self> {
        let ri = rows
            .iter()
            .map(|l| self.row_index(l).ok_or_else(|| Error::UnknownLabel(l.to_string())))
            .collect::<Result<Vec<_>>>()?;
        let ci = cols
            .iter()
            .map(|l| self.col_index(l).ok_or_else(|| Error::UnknownLabel(l.to_string())))
            .collect::<Result<Vec<_>>>()?;
        Ok(LabeledMatrix {
            rows: rows.to_vec(),
            cols: cols.to_vec(),
            entries: ri
                .iter()
                .map(|&i| ci.iter().map(|&j| self.entries[i][j].clone()).collect())
                .collect(),
        })
    }

    /// Positions where two equally-shaped matrices differ.
    pub fn diff(&self, other: &Self) -> Vec<(MunnIndex, MunnIndex)> {
        let mut out = Vec::new();
        for i in 0..self.nrows() {
            for j in 0..self.ncols() {
                if self.entries[i][j] != other.entries[i][j] {
                    out.push((self.rows[i].clone(), self.cols[j].clone()));
                }
            }
        }
        out
    }
}

impl<T: Field> LabeledMatrix<T> {
    /// Gauss–Jordan inverse. Row labels of the result are the column labels of `self`.
    pub fn inverse(&self) -> Result<Self> {
        let n = self.nrows();
        assert_eq!(n, self.ncols(), "inverse of a non-square matrix");
        let mut a = self.entries.clone();
        let mut inv = Self::identity(self.cols.clone()).entries;
        for col in 0..n {
            let piv = (col..n).find(|&r| !a[r][col].is_zero()).ok_or(Error::Singular)?;
            a.swap(col, piv);
            inv.swap(col, piv);
            let p = a[col][col].clone();
            for j in 0..n {
                a[col][j] = a[col][j].div(&p).unwrap();
                inv[col][j] = inv[col][j].div(&p).unwrap();
            }
            for r in 0..n {
                if r == col || a[r][col].is_zero() {
                    continue;
                }
                let f = a[r][col].clone();
                for j in 0..n {
                    let t = f.mul(&a[col][j]);
                    a[r][j] = a[r][j].sub(&t);
                    let t = f.mul(&inv[col][j]);
                    inv[r][j] = inv[r][j].sub(&t);
                }
            }
        }
        Ok(LabeledMatrix { rows: self.cols.clone(), cols: self.rows.clone(), entries: inv })
    }

    /// Solves `x · self = b` for a row vector `x`.
    pub fn solve_left(&self, b: &[T]) -> Result<Vec<T>> {
        let inv = self.inverse()?;
        Ok((0..self.nrows())
            .map(|i| {
                (0..b.len()).fold(T::zero(), |acc, k| acc.add(&b[k].mul(&inv.entries[k][i])))
            })
            .collect())
    }
}

pub fn to_rational(m: &LabeledMatrix<i64>) -> LabeledMatrix<BigRational> {
    m.map(|&x| BigRational::from_integer(BigInt::from(x)))
}

pub fn to_qrat(m: &LabeledMatrix<i64>) -> LabeledMatrix<QRat> {
    m.map(|&x| QRat::from_int(x))
}

/// Integer matrix from a rational one, if every entry is integral.
pub fn to_integer(m: &LabeledMatrix<BigRational>) -> Option<LabeledMatrix<i64>> {
    use num_traits::ToPrimitive;
    let mut ok = true;
    let out = m.map(|x| {
        if x.is_integer() {
            x.to_integer().to_i64().unwrap_or_else(|| {
                ok = false;
                0
            })
        } else {
            ok = false;
            0
        }
    });
    ok.then_some(out)
}
