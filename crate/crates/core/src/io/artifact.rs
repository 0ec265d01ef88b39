use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::group_tables::assemble_y;
use crate::hecke::tables::{assemble_yq, hecke_a_matrix, hecke_monoid_table};
use crate::matrix::LabeledMatrix;
use crate::partition::{MonoidKind, MunnIndex};
use crate::qpoly::QRat;
use crate::solomon::{a_matrix, b_matrix, monoid_table};

/// Pins the row/column order of `Q_n`; bump whenever the enumeration changes.
pub const ORDER_VERSION: u32 = 1;
pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum TableKind {
    M,
    A,
    B,
    Y,
    Mq,
    Yq,
    Aq,
}

impl TableKind {
    pub const ALL: [TableKind; 7] =
        [TableKind::M, TableKind::A, TableKind::B, TableKind::Y, TableKind::Mq, TableKind::Yq, TableKind::Aq];

    pub fn is_hecke(self) -> bool {
        matches!(self, TableKind::Mq | TableKind::Yq | TableKind::Aq)
    }
}

impl fmt::Display for TableKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

impl FromStr for TableKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        TableKind::ALL
            .into_iter()
            .find(|k| k.to_string().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::Parse(format!("unknown table kind {s:?}")))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct Metadata {
    pub monoid_kind: MonoidKind,
    pub n: usize,
    pub table_kind: TableKind,
    pub order_version: u32,
    pub tool_version: String,
}

impl Metadata {
    pub fn new(monoid_kind: MonoidKind, n: usize, table_kind: TableKind) -> Self {
        Metadata { monoid_kind, n, table_kind, order_version: ORDER_VERSION, tool_version: TOOL_VERSION.into() }
    }
}

/// A computed table with exact entries stored as strings.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableArtifact {
    pub metadata: Metadata,
    pub rows: Vec<String>,
    pub cols: Vec<String>,
    pub entries: Vec<Vec<String>>,
}

impl TableArtifact {
    pub fn from_matrix<T: fmt::Display>(metadata: Metadata, m: &LabeledMatrix<T>) -> Self {
        TableArtifact {
            metadata,
            rows: m.rows.iter().map(|l| l.to_string()).collect(),
            cols: m.cols.iter().map(|l| l.to_string()).collect(),
            entries: m.entries.iter().map(|r| r.iter().map(|v| v.to_string()).collect()).collect(),
        }
    }

    pub fn to_matrix(&self) -> Result<LabeledMatrix<QRat>> {
        let labels = |v: &[String]| v.iter().map(|s| s.parse::<MunnIndex>()).collect::<Result<Vec<_>>>();
        let entries = self
            .entries
            .iter()
            .map(|r| r.iter().map(|s| s.parse::<QRat>()).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        Ok(LabeledMatrix { rows: labels(&self.rows)?, cols: labels(&self.cols)?, entries })
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("artifact serializes");
        s.push('\n');
        s
    }

    pub fn from_json(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))
    }
}

/// Rough operation count used to refuse computations that will not finish at desk scale.
pub fn estimated_work(kind: MonoidKind, n: usize, table: TableKind) -> u128 {
    let units: u128 = (1..=n as u128).product::<u128>() << if kind == MonoidKind::Symplectic { n } else { 0 };
    let labels = crate::partition::enumerate_qn(kind, n).len() as u128;
    // characters of W_n are induced sums over the whole group
    let base = labels * labels * units * if kind == MonoidKind::Symplectic { units } else { 1 };
    if table.is_hecke() {
        base * labels
    } else {
        base
    }
}

pub const DEFAULT_WORK_BOUND: u128 = 2_000_000_000;

pub fn compute_table(kind: MonoidKind, n: usize, table: TableKind, bound: u128) -> Result<TableArtifact> {
    if n == 0 {
        return Err(Error::UnsupportedSize("n must be at least 1".into()));
    }
    let work = estimated_work(kind, n, table);
    if work > bound {
        return Err(Error::UnsupportedSize(format!(
            "{table} for {kind} n={n} needs about {work} operations (bound {bound})"
        )));
    }
    let meta = Metadata::new(kind, n, table);
    Ok(match table {
        TableKind::M => TableArtifact::from_matrix(meta, &monoid_table(kind, n)?.m),
        TableKind::A => TableArtifact::from_matrix(meta, &a_matrix(kind, n)),
        TableKind::B => TableArtifact::from_matrix(meta, &b_matrix(kind, n)),
        TableKind::Y => TableArtifact::from_matrix(meta, &assemble_y(kind, n)),
        TableKind::Mq => TableArtifact::from_matrix(meta, &hecke_monoid_table(kind, n)?.matrix),
        TableKind::Yq => TableArtifact::from_matrix(meta, &assemble_yq(kind, n)?.matrix),
        TableKind::Aq => TableArtifact::from_matrix(meta, &hecke_a_matrix(kind, n)?.matrix),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_round_trip_is_byte_identical() {
        for kind in [MonoidKind::Rook, MonoidKind::Symplectic] {
            for t in TableKind::ALL {
                let a = compute_table(kind, 2, t, DEFAULT_WORK_BOUND).unwrap();
                let s = a.to_json();
                let back = TableArtifact::from_json(&s).unwrap();
                assert_eq!(back, a);
                assert_eq!(back.to_json(), s);
                let m = a.to_matrix().unwrap();
                assert_eq!(TableArtifact::from_matrix(a.metadata.clone(), &m), a);
            }
        }
    }

    #[test]
    fn metadata_is_camel_case() {
        let a = compute_table(MonoidKind::Rook, 1, TableKind::A, DEFAULT_WORK_BOUND).unwrap();
        let s = a.to_json();
        assert!(s.contains("\"orderVersion\": 1"));
        assert!(s.contains("\"monoidKind\": \"rook\""));
        assert!(s.contains("\"tableKind\": \"A\""));
    }

    #[test]
    fn size_guard() {
        assert!(matches!(
            compute_table(MonoidKind::Symplectic, 9, TableKind::M, DEFAULT_WORK_BOUND),
            Err(Error::UnsupportedSize(_))
        ));
        assert!(matches!(compute_table(MonoidKind::Rook, 3, TableKind::M, 10), Err(Error::UnsupportedSize(_))));
        assert_eq!("mq".parse::<TableKind>().unwrap(), TableKind::Mq);
    }
}
