//! Reference tables shipped with the crate, and label-wise comparison against them.
//!
//! The text format is a header line `cols <labels...>` followed by one line per row,
//! `<row label> <entries...>`, whitespace separated.

use crate::error::{Error, Result};
use crate::matrix::LabeledMatrix;
use crate::partition::{MonoidKind, MunnIndex};
use crate::qpoly::QRat;

use super::artifact::TableKind;

pub struct Golden {
    pub name: &'static str,
    pub kind: MonoidKind,
    pub n: usize,
    pub table: TableKind,
    pub text: &'static str,
}

macro_rules! golden {
    ($name:literal, $kind:expr, $n:expr, $table:expr) => {
        Golden {
            name: $name,
            kind: $kind,
            n: $n,
            table: $table,
            text: include_str!(concat!("../../tests/golden/", $name, ".txt")),
        }
    };
}

pub const GOLDENS: &[Golden] = &[
    golden!("rsp6_A", MonoidKind::Symplectic, 3, TableKind::A),
    golden!("rsp6_B", MonoidKind::Symplectic, 3, TableKind::B),
    golden!("rsp6_Y", MonoidKind::Symplectic, 3, TableKind::Y),
    golden!("rsp6_M", MonoidKind::Symplectic, 3, TableKind::M),
    golden!("rsp4_Yq", MonoidKind::Symplectic, 2, TableKind::Yq),
    golden!("rsp4_Mq", MonoidKind::Symplectic, 2, TableKind::Mq),
    golden!("rsp4_B", MonoidKind::Symplectic, 2, TableKind::B),
    golden!("r2_Mq", MonoidKind::Rook, 2, TableKind::Mq),
    golden!("r2_Aq", MonoidKind::Rook, 2, TableKind::Aq),
];

pub fn golden(name: &str) -> Option<&'static Golden> {
    GOLDENS.iter().find(|g| g.name == name)
}

pub fn parse(text: &str) -> Result<LabeledMatrix<QRat>> {
    let mut lines = text.lines().filter(|l| !l.trim().is_empty());
    let header = lines.next().ok_or_else(|| Error::Parse("empty golden table".into()))?;
    let mut words = header.split_whitespace();
    if words.next() != Some("cols") {
        return Err(Error::Parse("golden table must start with `cols`".into()));
    }
    let cols = words.map(str::parse).collect::<Result<Vec<MunnIndex>>>()?;
    let (mut rows, mut entries) = (Vec::new(), Vec::new());
    for line in lines {
        let mut words = line.split_whitespace();
        rows.push(words.next().unwrap().parse::<MunnIndex>()?);
        let row = words.map(str::parse).collect::<Result<Vec<QRat>>>()?;
        if row.len() != cols.len() {
            return Err(Error::Parse(format!("row {} has {} entries", rows.last().unwrap(), row.len())));
        }
        entries.push(row);
    }
    Ok(LabeledMatrix { rows, cols, entries })
}

/// A printed reference value known to be wrong, with the value the tables require.
pub struct Erratum {
    pub golden: &'static str,
    pub row: &'static str,
    pub col: &'static str,
    pub printed: &'static str,
    pub corrected: &'static str,
    pub reason: &'static str,
}

pub const ERRATA: &[Erratum] = &[
    Erratum {
        golden: "rsp6_Y",
        row: "(1^3,0)",
        col: "(0,3)",
        printed: "2",
        corrected: "1",
        reason: "the character (0,3) is linear, so its degree is 1; with 2 the squared degrees sum to 51, not 48",
    },
    Erratum {
        golden: "rsp6_M",
        row: "(1^3,0)",
        col: "(0,3)",
        printed: "2",
        corrected: "1",
        reason: "the unit-group block of M repeats the misprinted entry of Y",
    },
];

pub fn errata_for(name: &str) -> impl Iterator<Item = &'static Erratum> + '_ {
    ERRATA.iter().filter(move |e| e.golden == name)
}

#[derive(Clone, Debug, PartialEq)]
pub struct Mismatch {
    pub row: MunnIndex,
    pub col: MunnIndex,
    pub expected: QRat,
    pub actual: QRat,
}

/// Entrywise comparison matched by row and column labels, independent of order.
pub fn compare(expected: &LabeledMatrix<QRat>, actual: &LabeledMatrix<QRat>) -> Result<Vec<Mismatch>> {
    if expected.nrows() != actual.nrows() || expected.ncols() != actual.ncols() {
        return Err(Error::Parse("golden table has a different shape".into()));
    }
    let aligned = actual.reindexed(&expected.rows, &expected.cols)?;
    let mut out = Vec::new();
    for i in 0..expected.nrows() {
        for j in 0..expected.ncols() {
            if expected.entries[i][j] != aligned.entries[i][j] {
                out.push(Mismatch {
                    row: expected.rows[i].clone(),
                    col: expected.cols[j].clone(),
                    expected: expected.entries[i][j].clone(),
                    actual: aligned.entries[i][j].clone(),
                });
            }
        }
    }
    Ok(out)
}

/// Splits the mismatches against a golden table into documented misprints (whose
/// computed value must equal the correction) and unexplained differences.
pub fn classify(name: &str, mismatches: Vec<Mismatch>) -> Result<(Vec<Mismatch>, Vec<Mismatch>)> {
    let mut known = Vec::new();
    let mut unexplained = Vec::new();
    for m in mismatches {
        let hit = errata_for(name).find(|e| e.row == m.row.to_string() && e.col == m.col.to_string());
        match hit {
            Some(e) if m.expected == e.printed.parse()? && m.actual == e.corrected.parse()? => known.push(m),
            _ => unexplained.push(m),
        }
    }
    Ok((known, unexplained))
}
