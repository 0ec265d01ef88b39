use std::fmt::Write;
use std::str::FromStr;

use crate::error::{Error, Result};

use super::artifact::TableArtifact;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Pretty,
    Json,
    Csv,
    Latex,
}

impl FromStr for Format {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "pretty" => Ok(Format::Pretty),
            "json" => Ok(Format::Json),
            "csv" => Ok(Format::Csv),
            "latex" => Ok(Format::Latex),
            _ => Err(Error::Parse(format!("unknown format {s:?}"))),
        }
    }
}

pub fn render(a: &TableArtifact, format: Format) -> String {
    match format {
        Format::Pretty => pretty(a),
        Format::Json => a.to_json(),
        Format::Csv => csv(a),
        Format::Latex => latex(a),
    }
}

/// Right-aligned columns; rows are classes, columns characters.
fn pretty(a: &TableArtifact) -> String {
    let m = &a.metadata;
    let mut cells: Vec<Vec<&str>> = vec![std::iter::once("").chain(a.cols.iter().map(String::as_str)).collect()];
    for (label, row) in a.rows.iter().zip(&a.entries) {
        cells.push(std::iter::once(label.as_str()).chain(row.iter().map(String::as_str)).collect());
    }
    let widths: Vec<usize> =
        (0..cells[0].len()).map(|j| cells.iter().map(|r| r[j].chars().count()).max().unwrap_or(0)).collect();
    let mut out = format!("{} of the {} monoid, n = {}\n", m.table_kind, m.monoid_kind, m.n);
    for row in &cells {
        let line: Vec<String> = row.iter().zip(&widths).map(|(c, &w)| format!("{c:>w$}")).collect();
        out.push_str(line.join("  ").trim_end());
        out.push('\n');
    }
    out
}

fn csv(a: &TableArtifact) -> String {
    let mut w = ::csv::Writer::from_writer(Vec::new());
    let header: Vec<&str> = std::iter::once("class").chain(a.cols.iter().map(String::as_str)).collect();
    w.write_record(&header).expect("in-memory write");
    for (label, row) in a.rows.iter().zip(&a.entries) {
        let rec: Vec<&str> = std::iter::once(label.as_str()).chain(row.iter().map(String::as_str)).collect();
        w.write_record(&rec).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("flush")).expect("utf-8")
}

/// `(1^2,0)` → `1^2,\emptyset` style labels for the bordered layout.
fn latex_label(s: &str) -> String {
    let inner = s.trim_start_matches('(').trim_end_matches(')');
    if inner.contains(',') {
        inner.split(',').map(|p| if p == "0" { r"\emptyset" } else { p }).collect::<Vec<_>>().join(",")
    } else {
        s.to_string()
    }
}

/// `(1/2)q-1/2` → `\frac{1}{2}q-\frac{1}{2}`.
fn latex_value(s: &str) -> String {
    let mut out = String::new();
    let cleaned = s.replace(['(', ')'], "");
    let mut token = String::new();
    let flush = |token: &mut String, out: &mut String| {
        if let Some((n, d)) = token.split_once('/') {
            write!(out, r"\frac{{{n}}}{{{d}}}").unwrap();
        } else {
            out.push_str(token);
        }
        token.clear();
    };
    for c in cleaned.chars() {
        if c.is_ascii_digit() || c == '/' {
            token.push(c);
        } else {
            flush(&mut token, &mut out);
            out.push(c);
        }
    }
    flush(&mut token, &mut out);
    out
}

fn latex(a: &TableArtifact) -> String {
    let m = &a.metadata;
    let mut out = String::new();
    let header: Vec<String> = a.cols.iter().map(|c| latex_label(c)).collect();
    writeln!(out, "% {} of the {} monoid, n = {}", m.table_kind, m.monoid_kind, m.n).unwrap();
    writeln!(out, "$${} = \\kbordermatrix{{ r_\\mu \\backslash \\chi_\\lambda & {} \\\\", m.table_kind, header.join(" & "))
        .unwrap();
    for (i, (label, row)) in a.rows.iter().zip(&a.entries).enumerate() {
        let vals: Vec<String> = row.iter().map(|v| latex_value(v)).collect();
        let end = if i + 1 == a.rows.len() { "" } else { r" \\" };
        writeln!(out, "{} & {}{end}", latex_label(label), vals.join(" & ")).unwrap();
    }
    out.push_str("}.$$\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::io::artifact::{compute_table, TableKind, DEFAULT_WORK_BOUND};
    use crate::partition::MonoidKind;

    #[test]
    fn latex_values_and_labels() {
        assert_eq!(latex_value("q^4-q^2"), "q^4-q^2");
        assert_eq!(latex_value("(1/2)q-1/2"), r"\frac{1}{2}q-\frac{1}{2}");
        assert_eq!(latex_value("-2q^2"), "-2q^2");
        assert_eq!(latex_label("(1^2,0)"), r"1^2,\emptyset");
        assert_eq!(latex_label("(21)"), "(21)");
    }

    #[test]
    fn renderers() {
        let a = compute_table(MonoidKind::Rook, 2, TableKind::Mq, DEFAULT_WORK_BOUND).unwrap();
        let p = render(&a, Format::Pretty);
        assert!(p.lines().nth(2).unwrap().trim_start().starts_with("(1^2)"));
        let c = render(&a, Format::Csv);
        assert_eq!(c.lines().next().unwrap(), "class,(1^2),(2),(1),(0)");
        let s = compute_table(MonoidKind::Symplectic, 1, TableKind::A, DEFAULT_WORK_BOUND).unwrap();
        assert!(render(&s, Format::Csv).contains("\"(1,0)\""));
        let l = render(&s, Format::Latex);
        assert!(l.contains(r"\kbordermatrix{ r_\mu \backslash \chi_\lambda & 1,\emptyset & \emptyset,1 & (1) & (0) \\"));
        assert!(l.trim_end().ends_with("}.$$"));
        assert_eq!("LaTeX".parse::<Format>().unwrap(), Format::Latex);
    }
}
