//! Graded Betti numbers of `S/J_G` and of `S/in(J_G)`, and the invariants
//! read off from them.

mod artinian;
mod hochster;
mod homology;
mod koszul;

pub use artinian::{artinian_reduction_fm, socle_degrees, socle_monomials, ArtinianQuotient};
pub use hochster::{hochster_betti, hochster_fine, FineBetti};
pub use homology::{reduced_homology_ranks, HomologyRanks};
pub(crate) use koszul::koszul_with;
pub use koszul::{koszul_betti, koszul_betti_fine, KoszulEngine};

use crate::error::Result;
use crate::graphs::Graph;
use crate::ideal::{clique_complex, f_vector, stanley_reisner_complex, SimplicialComplex};
use serde::Serialize;
use std::collections::BTreeMap;
use std::fmt;

/// Degree in the grading `deg x_v = (e_v, 1)`, `deg y_v = (e_v, 0)`, under
/// which `J_G` is homogeneous: per-vertex degrees `a` and total `x`-degree `k`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FineDegree {
    pub a: Vec<u8>,
    pub k: u8,
}

impl FineDegree {
    pub fn total(&self) -> usize {
        self.a.iter().map(|&x| x as usize).sum()
    }

    /// Degree of a squarefree monomial given by its support over `2n` variables.
    pub fn of_support(mask: u32, n: usize) -> Self {
        let a = (0..n).map(|v| ((mask >> v & 1) + (mask >> (n + v) & 1)) as u8).collect();
        let k = (mask & ((1u32 << n) - 1)).count_ones() as u8;
        FineDegree { a, k }
    }
}

/// Sparse graded Betti table `(i, j) -> β_{i,j}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BettiTable {
    entries: BTreeMap<(usize, usize), u64>,
    pub ring_vars: usize,
    pub field_char: u32,
}

#[derive(Serialize)]
struct JsonEntry {
    i: usize,
    j: usize,
    value: u64,
}

impl BettiTable {
    pub fn new(ring_vars: usize, field_char: u32) -> Self {
        BettiTable { entries: BTreeMap::new(), ring_vars, field_char }
    }

    /// Adds `value` to `β_{i,j}`.
    pub fn add(&mut self, i: usize, j: usize, value: u64) {
        if value > 0 {
            *self.entries.entry((i, j)).or_insert(0) += value;
        }
    }

    pub fn get(&self, i: usize, j: usize) -> u64 {
        self.entries.get(&(i, j)).copied().unwrap_or(0)
    }

    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, u64)> + '_ {
        self.entries.iter().map(|(&(i, j), &v)| (i, j, v))
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn pd(&self) -> usize {
        self.entries.keys().map(|&(i, _)| i).max().unwrap_or(0)
    }

    pub fn reg(&self) -> usize {
        self.entries.keys().map(|&(i, j)| j - i).max().unwrap_or(0)
    }

    /// Entries `(i, j, β_{i,j})` with nothing nonzero weakly south-east of
    /// them in the `(i, j - i)` grid.
    pub fn extremal(&self) -> Vec<(usize, usize, u64)> {
        self.entries()
            .filter(|&(i, j, _)| !self.entries.keys().any(|&(k, l)| (k, l) != (i, j) && k >= i && l - k >= j - i))
            .collect()
    }

    /// `β_{pd, pd + reg}`, the extremal number at the corner when it is nonzero.
    pub fn corner(&self) -> u64 {
        let p = self.pd();
        self.get(p, p + self.reg())
    }

    /// Nonzero `(j, β_{i,j})` in homological degree `i`.
    pub fn column(&self, i: usize) -> Vec<(usize, u64)> {
        self.entries.range((i, 0)..=(i, usize::MAX)).map(|(&(_, j), &v)| (j, v)).collect()
    }

    pub fn total(&self, i: usize) -> u64 {
        self.column(i).iter().map(|&(_, v)| v).sum()
    }

    /// Entrywise `self <= other`.
    pub fn dominated_by(&self, other: &BettiTable) -> bool {
        self.entries().all(|(i, j, v)| v <= other.get(i, j))
    }

    /// `Σ_i (-1)^i β_{i,j}`.
    pub fn euler_characteristic(&self, j: usize) -> i64 {
        self.entries()
            .filter(|&(_, jj, _)| jj == j)
            .map(|(i, _, v)| if i % 2 == 0 { v as i64 } else { -(v as i64) })
            .sum()
    }

    pub fn to_json(&self) -> serde_json::Value {
        let list: Vec<JsonEntry> = self.entries().map(|(i, j, value)| JsonEntry { i, j, value }).collect();
        serde_json::to_value(list).expect("plain data serializes")
    }
}

/// Macaulay2-style grid: columns are `i`, rows are `j - i`.
impl fmt::Display for BettiTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let pd = self.pd();
        let reg = self.reg();
        let cell = |v: u64| if v == 0 { ".".to_string() } else { v.to_string() };
        let mut rows: Vec<(String, Vec<String>)> = Vec::new();
        rows.push(("".into(), (0..=pd).map(|i| i.to_string()).collect()));
        rows.push(("total:".into(), (0..=pd).map(|i| self.total(i).to_string()).collect()));
        for r in 0..=reg {
            rows.push((format!("{r}:"), (0..=pd).map(|i| cell(self.get(i, i + r))).collect()));
        }
        let head = rows.iter().map(|(h, _)| h.len()).max().unwrap_or(0);
        let widths: Vec<usize> = (0..=pd).map(|c| rows.iter().map(|(_, cs)| cs[c].len()).max().unwrap_or(1)).collect();
        for (h, cs) in &rows {
            write!(f, "{h:>head$}")?;
            for (c, w) in cs.iter().zip(&widths) {
                write!(f, " {c:>w$}")?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Invariants {
    pub pd: usize,
    pub reg: usize,
    pub dim: usize,
    pub depth: usize,
    pub codim: usize,
    pub is_cm: bool,
    pub extremal: Vec<(usize, usize, u64)>,
}

/// `dim` is the largest facet size of `Δ_<` (equal for `S/J_G` and its
/// initial ideal), `depth = 2n - pd` by Auslander–Buchsbaum.
pub fn derived_invariants(table: &BettiTable, delta: &SimplicialComplex) -> Invariants {
    let nvars = table.ring_vars;
    let pd = table.pd();
    let dim = delta.max_facet_size();
    let depth = nvars - pd;
    Invariants { pd, reg: table.reg(), dim, depth, codim: nvars - dim, is_cm: depth == dim, extremal: table.extremal() }
}

/// Outcome of a ring-property test that presupposes Cohen–Macaulayness.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub holds: bool,
    pub not_cm: bool,
}

/// Level: the last column of a Cohen–Macaulay table sits in a single strand.
pub fn table_is_level(table: &BettiTable) -> bool {
    table.column(table.pd()).len() == 1
}

/// Pseudo-Gorenstein: the unique extremal number of a CM table is 1.
pub fn table_is_pseudo_gorenstein(table: &BettiTable) -> bool {
    table.corner() == 1
}

/// Monomial table, CM flag and exact last column of `S/J_G`.
fn last_column(g: &Graph, p: u32) -> Result<Option<BettiTable>> {
    let delta = stanley_reisner_complex(g);
    if !delta.is_pure() {
        return Ok(None);
    }
    let fine = hochster_fine(&delta, p)?;
    let mono = fine.coarse();
    if !derived_invariants(&mono, &delta).is_cm {
        return Ok(None);
    }
    let pd = mono.pd();
    let window: Vec<(usize, usize)> = mono.column(pd).iter().map(|&(j, _)| (pd, j)).collect();
    Ok(Some(koszul_betti_fine(g, p, &fine, &window)?))
}

pub fn is_level(g: &Graph, p: u32) -> Result<Verdict> {
    Ok(match last_column(g, p)? {
        None => Verdict { holds: false, not_cm: true },
        Some(t) => Verdict { holds: table_is_level(&t), not_cm: false },
    })
}

pub fn is_pseudo_gorenstein(g: &Graph, p: u32) -> Result<Verdict> {
    Ok(match last_column(g, p)? {
        None => Verdict { holds: false, not_cm: true },
        Some(t) => Verdict { holds: table_is_pseudo_gorenstein(&t), not_cm: false },
    })
}

/// Gorenstein binomial edge ideals of connected graphs are exactly those of paths.
pub fn is_gorenstein_path(g: &Graph) -> bool {
    g.is_path()
}

/// `β_{i,i+1}(S/J_G) = i · f_i(Δ(G))` for every `i >= 1`.
pub fn linear_strand_check(g: &Graph, p: u32) -> Result<bool> {
    let table = koszul_betti(g, p, None)?;
    let f = f_vector(&clique_complex(g));
    let top = table.pd().max(f.len());
    Ok((1..=top).all(|i| table.get(i, i + 1) == i as u64 * f.get(i).copied().unwrap_or(0) as u64))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn table(entries: &[(usize, usize, u64)]) -> BettiTable {
        let mut t = BettiTable::new(6, 32003);
        for &(i, j, v) in entries {
            t.add(i, j, v);
        }
        t
    }

    #[test]
    fn corner_and_extremals() {
        let t = table(&[(0, 0, 1), (1, 2, 3), (2, 3, 2)]);
        assert_eq!((t.pd(), t.reg(), t.corner()), (2, 1, 2));
        assert_eq!(t.extremal(), vec![(2, 3, 2)]);
        // Two extremal numbers: a non-CM shape.
        let t = table(&[(0, 0, 1), (1, 3, 1), (2, 3, 1)]);
        assert_eq!(t.extremal(), vec![(1, 3, 1), (2, 3, 1)]);
        assert_eq!(t.euler_characteristic(3), 0);
    }

    #[test]
    fn grid_and_json() {
        let t = table(&[(0, 0, 1), (1, 2, 2), (2, 4, 1)]);
        let grid = t.to_string();
        assert_eq!(grid, "       0 1 2\ntotal: 1 2 1\n    0: 1 . .\n    1: . 2 .\n    2: . . 1\n");
        let json = t.to_json().to_string();
        assert_eq!(json, r#"[{"i":0,"j":0,"value":1},{"i":1,"j":2,"value":2},{"i":2,"j":4,"value":1}]"#);
    }

    #[test]
    fn fine_degree_of_support() {
        // x1*y2 over n = 2: positions 0 and 3.
        let d = FineDegree::of_support(0b1001, 2);
        assert_eq!(d, FineDegree { a: vec![1, 1], k: 1 });
        assert_eq!(d.total(), 2);
    }
}
