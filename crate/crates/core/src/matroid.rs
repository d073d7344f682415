//! Basis exchange for facet sets of simplicial complexes.

use crate::enumerate::enumerate_connected;
use crate::error::{Error, Result};
use crate::graphs::{canonical_word, Graph};
use crate::ideal::{stanley_reisner_complex, SimplicialComplex};
use rayon::prelude::*;
use serde::Serialize;
use std::collections::HashSet;
use std::fmt;

/// Facets `F, F'` and `i ∈ F` such that no `j ∈ F'` makes `(F \ i) ∪ j` a facet.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExchangeViolation {
    pub facet: String,
    pub other: String,
    pub removed: String,
}

impl fmt::Display for ExchangeViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F = {}, F' = {}, i = {}", self.facet, self.other, self.removed)
    }
}

fn bits(mask: u32) -> Vec<u32> {
    (0..32).filter(|b| mask >> b & 1 == 1).collect()
}

/// First violating triple with facets ordered lexicographically by their
/// sorted variable positions, then by the removed position. The result does
/// not depend on the order in which the facets are stored.
pub fn exchange_violation(delta: &SimplicialComplex) -> Option<ExchangeViolation> {
    let mut facets: Vec<(Vec<u32>, u32)> = delta.facets.iter().map(|&f| (bits(f), f)).collect();
    facets.sort();
    let is_facet = |s: u32| facets.iter().any(|&(_, f)| f == s);
    for (fbits, f) in &facets {
        for (_, g) in &facets {
            for &i in fbits {
                let base = f & !(1 << i);
                if !bits(*g).iter().any(|&j| is_facet(base | 1 << j)) {
                    let label = |p: u32| delta.labels[p as usize].clone();
                    return Some(ExchangeViolation {
                        facet: delta.format_set(*f),
                        other: delta.format_set(*g),
                        removed: label(i),
                    });
                }
            }
        }
    }
    None
}

pub fn is_matroid(delta: &SimplicialComplex) -> bool {
    exchange_violation(delta).is_none()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MatroidTheoremReport {
    pub graphs_checked: usize,
    pub labelings_checked: usize,
    /// Canonical words of paths whose natural labeling fails, and of
    /// non-paths with some labeling that passes.
    pub violations: Vec<String>,
}

/// Distinct labeled copies of `g`, as sorted edge lists.
fn labelings(g: &Graph) -> Vec<Graph> {
    let n = g.n();
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    let mut perm: Vec<usize> = (1..=n).collect();
    let mut c = vec![0usize; n];
    let mut visit = |perm: &[usize]| {
        let h = g.relabel(perm);
        if seen.insert(h.edges()) {
            out.push(h);
        }
    };
    visit(&perm);
    // Heap's algorithm.
    let mut i = 0;
    while i < n {
        if c[i] < i {
            perm.swap(if i % 2 == 0 { 0 } else { c[i] }, i);
            visit(&perm);
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    out
}

/// Checks over all connected graphs on `2..=n_max` vertices that `Δ_<(G)`
/// is a matroid only for paths: the path `1 - 2 - ... - n` passes, and no
/// labeling of any other graph does. The complex depends on the labeling,
/// and other labelings of a path generally fail.
pub fn matroid_path_theorem_check(n_max: usize) -> Result<MatroidTheoremReport> {
    if !(2..=7).contains(&n_max) {
        return Err(Error::InvalidParameter(format!("matroid check supports 2 <= n_max <= 7, got {n_max}")));
    }
    let mut graphs = Vec::new();
    for n in 2..=n_max {
        graphs.extend(enumerate_connected(n)?);
    }
    let outcomes: Vec<(usize, Option<String>)> = graphs
        .par_iter()
        .map(|g| {
            if g.is_path() {
                let ok = is_matroid(&stanley_reisner_complex(&Graph::path(g.n())));
                (1, (!ok).then(|| canonical_word(g)))
            } else {
                let copies = labelings(g);
                let bad = copies.iter().any(|h| is_matroid(&stanley_reisner_complex(h)));
                (copies.len(), bad.then(|| canonical_word(g)))
            }
        })
        .collect();
    Ok(MatroidTheoremReport {
        graphs_checked: graphs.len(),
        labelings_checked: outcomes.iter().map(|o| o.0).sum(),
        violations: outcomes.into_iter().filter_map(|o| o.1).collect(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn triangle_witness() {
        let delta = stanley_reisner_complex(&Graph::complete(3));
        let w = exchange_violation(&delta).unwrap();
        assert_eq!(w.facet, "{x1,x2,x3,y1}");
        assert_eq!(w.other, "{x3,y1,y2,y3}");
        assert_eq!(w.removed, "x2");
    }

    #[test]
    fn paths_and_single_facets() {
        assert!(is_matroid(&stanley_reisner_complex(&Graph::path(3))));
        assert!(is_matroid(&stanley_reisner_complex(&Graph::path(6))));
        let one = SimplicialComplex::new(vec!["a".into(), "b".into()], vec![0b11]);
        assert!(is_matroid(&one));
    }

    #[test]
    fn small_graphs() {
        let r = matroid_path_theorem_check(4).unwrap();
        assert_eq!((r.graphs_checked, r.violations.len()), (9, 0), "{:?}", r.violations);
        // A path labeled with its centre last is not a matroid.
        let bent = Graph::from_edges(3, &[(1, 3), (2, 3)]).unwrap();
        assert!(!is_matroid(&stanley_reisner_complex(&bent)));
        assert_eq!(labelings(&Graph::path(3)).len(), 3);
        assert_eq!(labelings(&Graph::complete(4)).len(), 1);
        assert!(matroid_path_theorem_check(8).is_err());
    }
}
