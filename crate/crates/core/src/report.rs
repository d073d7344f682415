//! Enumeration-driven reports: counts of Cohen–Macaulay, level and
//! pseudo-Gorenstein indecomposable graphs, and the per-graph database.

use crate::classify::{classify_with, ClassificationRecord, ClassifyOptions};
use crate::enumerate::{enumerate_connected, MAX_ENUMERATION_N};
use crate::error::{Error, Result};
use crate::graphs::decompose;
use rayon::prelude::*;
use serde::Serialize;
use std::fmt;

/// Published counts `(CM, level, pG)` of indecomposable graphs for
/// `n = 2..=12`.
pub const PUBLISHED_COUNTS: [(usize, usize, usize, usize); 11] = [
    (2, 1, 1, 1),
    (3, 1, 1, 0),
    (4, 1, 1, 0),
    (5, 2, 2, 0),
    (6, 5, 3, 2),
    (7, 15, 5, 5),
    (8, 51, 12, 8),
    (9, 194, 27, 34),
    (10, 833, 82, 144),
    (11, 3824, 231, 520),
    (12, 19343, 726, 2303),
];

pub fn published_counts(n: usize) -> Option<(usize, usize, usize)> {
    PUBLISHED_COUNTS.iter().find(|r| r.0 == n).map(|&(_, c, l, p)| (c, l, p))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Table1Row {
    pub n: usize,
    pub connected: usize,
    pub indecomposable: usize,
    pub cm: usize,
    pub level: usize,
    pub pseudo_gorenstein: usize,
    pub incomplete: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Table1Report {
    pub rows: Vec<Table1Row>,
    /// One record per indecomposable connected graph, ordered by `n` then
    /// canonical word.
    pub records: Vec<ClassificationRecord>,
}

impl Table1Report {
    pub fn row(&self, n: usize) -> Option<&Table1Row> {
        self.rows.iter().find(|r| r.n == n)
    }

    /// One JSON object per line.
    pub fn database_jsonl(&self) -> String {
        self.records.iter().map(|r| serde_json::to_string(r).expect("records serialize") + "\n").collect()
    }

    pub fn database_csv(&self) -> String {
        let mut out = String::from(ClassificationRecord::CSV_HEADER);
        out.push('\n');
        for r in &self.records {
            out.push_str(&r.csv_row());
            out.push('\n');
        }
        out
    }
}

impl fmt::Display for Table1Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let ns: Vec<usize> = self.rows.iter().map(|r| r.n).collect();
        let line = |f: &mut fmt::Formatter<'_>,
                    name: &str,
                    get: &dyn Fn(&Table1Row) -> usize,
                    published: &dyn Fn((usize, usize, usize)) -> usize| {
            write!(f, "{name:<18}")?;
            for r in &self.rows {
                write!(f, "{:>6}", get(r))?;
            }
            write!(f, "   published:")?;
            for &n in &ns {
                match published_counts(n) {
                    Some(c) => write!(f, " {}", published(c))?,
                    None => write!(f, " -")?,
                }
            }
            writeln!(f)
        };
        write!(f, "{:<18}", "n")?;
        for n in &ns {
            write!(f, "{n:>6}")?;
        }
        writeln!(f)?;
        line(f, "Cohen-Macaulay", &|r| r.cm, &|c| c.0)?;
        line(f, "Level", &|r| r.level, &|c| c.1)?;
        line(f, "pseudo-Gorenstein", &|r| r.pseudo_gorenstein, &|c| c.2)?;
        let incomplete: usize = self.rows.iter().map(|r| r.incomplete).sum();
        if incomplete > 0 {
            writeln!(f, "incomplete records: {incomplete}")?;
        }
        Ok(())
    }
}

/// Classifies every indecomposable connected graph on `n` vertices, in
/// canonical-word order.
pub fn classify_indecomposable(n: usize, opts: &ClassifyOptions) -> Result<Vec<ClassificationRecord>> {
    let graphs: Vec<_> = enumerate_connected(n)?.into_iter().filter(|g| decompose(g).is_indecomposable()).collect();
    graphs.par_iter().map(|g| classify_with(g, opts)).collect()
}

/// Counts per `n = 2..=n_max` of indecomposable connected graphs that are
/// CM, level and pseudo-Gorenstein.
pub fn table1_report(n_max: usize, p: u32) -> Result<Table1Report> {
    if !(2..=MAX_ENUMERATION_N).contains(&n_max) {
        return Err(Error::InvalidParameter(format!(
            "the count table supports 2 <= n_max <= {MAX_ENUMERATION_N}, got {n_max}"
        )));
    }
    let opts = ClassifyOptions { field_char: p, ..ClassifyOptions::default() };
    let mut report = Table1Report { rows: Vec::new(), records: Vec::new() };
    for n in 2..=n_max {
        let connected = enumerate_connected(n)?.len();
        let recs = classify_indecomposable(n, &opts)?;
        report.rows.push(Table1Row {
            n,
            connected,
            indecomposable: recs.len(),
            cm: recs.iter().filter(|r| r.is_cm()).count(),
            level: recs.iter().filter(|r| r.is_level()).count(),
            pseudo_gorenstein: recs.iter().filter(|r| r.is_pseudo_gorenstein()).count(),
            incomplete: recs.iter().filter(|r| !r.complete).count(),
        });
        report.records.extend(recs);
    }
    Ok(report)
}

/// Canonical words of indecomposable pseudo-Gorenstein graphs on `n`
/// vertices with regularity 4 and no universal vertex.
pub fn find_reg4_noncone_pg(n: usize, p: u32) -> Result<Vec<String>> {
    let opts = ClassifyOptions { field_char: p, ..ClassifyOptions::default() };
    Ok(classify_indecomposable(n, &opts)?
        .into_iter()
        .filter(|r| r.is_pseudo_gorenstein() && r.reg == Some(4) && !r.is_cone)
        .map(|r| r.canonical_word)
        .collect())
}
