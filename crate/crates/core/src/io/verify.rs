//! Invariant suites runnable from the command line.

use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::group_tables::{assemble_y, centralizer_orders};
use crate::hecke::rewriter::{ConsistencyEntry, Rewriter};
use crate::hecke::tables::{
    assemble_yq, hecke_a_matrix, hecke_monoid_table, hecke_symmetric_table, starkey_table,
    transition_coefficients,
};
use crate::matrix::{to_qrat, to_rational};
use crate::monoid::MonoidContext;
use crate::partition::{enumerate_partitions, enumerate_qn, MonoidKind, MunnIndex, Partition};
use crate::qpoly::QRat;
use crate::solomon::{
    a_matrix_by_counting, induced_young_character, llc_character_oracle, monoid_table, oracle_table,
    restriction_multiplicities, verify_b_from_a,
};

use super::artifact::{compute_table, DEFAULT_WORK_BOUND};
use super::golden::{self, GOLDENS};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Solomon,
    Hecke,
    Reduce,
    All,
}

impl FromStr for Suite {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "solomon" => Ok(Suite::Solomon),
            "hecke" => Ok(Suite::Hecke),
            "reduce" => Ok(Suite::Reduce),
            "all" => Ok(Suite::All),
            _ => Err(Error::Parse(format!("unknown suite {s:?}"))),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    #[serde(skip_serializing_if = "String::is_empty")]
    pub detail: String,
}

#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct Report {
    pub monoid_kind: MonoidKind,
    pub n: usize,
    pub checks: Vec<Check>,
    pub passed: bool,
}

/// `Ok(None)` passes, `Ok(Some(detail))` fails with the detail, `Err` fails with the error.
fn check(out: &mut Vec<Check>, name: impl Into<String>, f: impl FnOnce() -> Result<Option<String>>) {
    let (passed, detail) = match f() {
        Ok(None) => (true, String::new()),
        Ok(Some(d)) => (false, d),
        Err(e) => (false, e.to_string()),
    };
    out.push(Check { name: name.into(), passed, detail });
}

fn first<T: std::fmt::Debug>(v: Vec<T>) -> Option<String> {
    v.into_iter().next().map(|x| format!("first difference at {x:?}"))
}

fn golden_checks(out: &mut Vec<Check>, kind: MonoidKind, n: usize, hecke: bool) {
    for g in GOLDENS.iter().filter(|g| g.kind == kind && g.n == n && g.table.is_hecke() == hecke) {
        check(out, format!("golden {}", g.name), || {
            let expected = golden::parse(g.text)?;
            let actual = compute_table(kind, n, g.table, DEFAULT_WORK_BOUND)?.to_matrix()?;
            let (known, unexplained) = golden::classify(g.name, golden::compare(&expected, &actual)?)?;
            let expected_known = golden::errata_for(g.name).count();
            if known.len() != expected_known {
                return Ok(Some(format!("{} of {expected_known} documented misprints reproduced", known.len())));
            }
            Ok(first(unexplained.into_iter().map(|m| (m.row, m.col, m.expected, m.actual)).collect()))
        });
    }
}

pub fn solomon_suite(kind: MonoidKind, n: usize) -> Vec<Check> {
    let mut out = Vec::new();
    check(&mut out, "A·Y = Y·B", || monoid_table(kind, n).map(|_| None));
    check(&mut out, "M equals direct evaluation at class representatives", || {
        Ok(first(monoid_table(kind, n)?.m.diff(&oracle_table(kind, n))))
    });
    check(&mut out, "A equals stable-set counts", || {
        Ok(first(crate::solomon::a_matrix(kind, n).diff(&a_matrix_by_counting(kind, n))))
    });
    check(&mut out, "B = Yᵀ·diag(z)⁻¹·A·Y", || Ok(first(verify_b_from_a(kind, n))));
    check(&mut out, "Y·Yᵀ = diag(z)", || {
        let y = assemble_y(kind, n);
        let z = centralizer_orders(kind, n);
        let g = y.mul(&y.transpose());
        let bad: Vec<_> = (0..g.nrows())
            .flat_map(|i| (0..g.ncols()).map(move |j| (i, j)))
            .filter(|&(i, j)| g.entries[i][j] != if i == j { z[&g.rows[i]] as i64 } else { 0 })
            .collect();
        Ok(first(bad))
    });
    if n <= 2 {
        check(&mut out, "B equals restriction multiplicities", || {
            Ok(first(restriction_multiplicities(kind, n).diff(&crate::solomon::b_matrix(kind, n))))
        });
    }
    if kind == MonoidKind::Symplectic {
        check(&mut out, "restriction to units is an induced Young character", || {
            let ctx = MonoidContext::new(kind, n);
            for t in 0..=n {
                for nu in enumerate_partitions(t) {
                    for w in ctx.units() {
                        let lhs = llc_character_oracle(&MunnIndex::Part(nu.clone()), w, &ctx);
                        if lhs != induced_young_character(&ctx, &nu, w) {
                            return Ok(Some(format!("{nu} at {w}")));
                        }
                    }
                }
            }
            Ok(None)
        });
    }
    golden_checks(&mut out, kind, n, false);
    out
}

pub fn hecke_suite(kind: MonoidKind, n: usize) -> Vec<Check> {
    let mut out = Vec::new();
    golden_checks(&mut out, kind, n, true);
    check(&mut out, "M_q at q = 1 equals M", || {
        let mq = hecke_monoid_table(kind, n)?;
        Ok(first(mq.specialize(1)?.diff(&to_rational(&monoid_table(kind, n)?.m))))
    });
    check(&mut out, "A_q at q = 1 equals A", || {
        let aq = hecke_a_matrix(kind, n)?;
        Ok(first(aq.specialize(1)?.diff(&to_rational(&monoid_table(kind, n)?.a))))
    });
    check(&mut out, "Y_q⁻¹·M_q = B", || {
        let yq = assemble_yq(kind, n)?.matrix;
        let mq = hecke_monoid_table(kind, n)?.matrix;
        Ok(first(yq.inverse()?.mul(&mq).diff(&to_qrat(&monoid_table(kind, n)?.b))))
    });
    for t in 0..=n.min(4) {
        check(&mut out, format!("seminormal H(S_{t}) equals Starkey's rule"), || {
            Ok(first(hecke_symmetric_table(t)?.matrix.diff(&starkey_table(t).matrix)))
        });
    }
    if n <= 2 {
        check(&mut out, "transition coefficients supported on blocks and reproduce M_q", || {
            let tc = transition_coefficients(kind, n)?;
            if let Some(x) = tc.starkey_mismatches().into_iter().next() {
                return Ok(Some(format!("Starkey weight differs at {x:?}")));
            }
            let m = to_qrat(&monoid_table(kind, n)?.m);
            let mq = hecke_monoid_table(kind, n)?.matrix;
            for (i, mu) in mq.rows.iter().enumerate() {
                for j in 0..mq.ncols() {
                    let s = m.rows.iter().enumerate().fold(QRat::zero(), |acc, (k, g)| {
                        &acc + &(&tc.get(mu, g) * &m.entries[k][j])
                    });
                    if s != mq.entries[i][j] {
                        return Ok(Some(format!("{mu} column {}", mq.cols[j])));
                    }
                }
            }
            Ok(None)
        });
    }
    out
}

/// Number of monoid elements above which exhaustive reduction checks are skipped.
const EXHAUSTIVE_LIMIT: usize = 2000;

pub fn reduce_suite(kind: MonoidKind, n: usize) -> Vec<Check> {
    let mut out = Vec::new();
    let ctx = MonoidContext::new(kind, n);
    let rw = Rewriter::new(&ctx);
    let zero = MunnIndex::Part(Partition::empty());
    check(&mut out, "standard elements reduce to their own class", || {
        for label in enumerate_qn(kind, n).labels {
            let r = ctx.class_representative(&label);
            let red = rw.reduce_to_standard(&r)?;
            if red.coefficients.len() != 1 || red.get(&label) != QRat::one() {
                return Ok(Some(format!("{label}")));
            }
        }
        Ok(None)
    });
    if ctx.degree() > 6 {
        return out;
    }
    let elements = ctx.elements();
    if elements.len() > EXHAUSTIVE_LIMIT {
        return out;
    }
    check(&mut out, format!("q = 1 reduction matches direct values on all {} elements", elements.len()), || {
        for r in elements {
            if let Some(e) = rw.consistency_report(r)?.into_iter().find(|e: &ConsistencyEntry| !e.ok()) {
                return Ok(Some(format!("{r} at {}: {} vs {}", e.character, e.reduced, e.oracle)));
            }
        }
        Ok(None)
    });
    check(&mut out, "index character is q^l(r) on every element", || {
        for r in elements {
            let v = rw.character_value_at(r, &zero)?;
            if v != QRat::q_pow(rw.length(r)? as i64) {
                return Ok(Some(format!("{r}: {v}")));
            }
        }
        Ok(None)
    });
    out
}

pub fn run(kind: MonoidKind, n: usize, suite: Suite) -> Report {
    let checks = match suite {
        Suite::Solomon => solomon_suite(kind, n),
        Suite::Hecke => hecke_suite(kind, n),
        Suite::Reduce => reduce_suite(kind, n),
        Suite::All => {
            let mut v = solomon_suite(kind, n);
            v.extend(hecke_suite(kind, n));
            v.extend(reduce_suite(kind, n));
            v
        }
    };
    let passed = checks.iter().all(|c| c.passed);
    Report { monoid_kind: kind, n, checks, passed }
}
