use super::homology::homology_of_facets;
use super::{BettiTable, FineDegree};
use crate::error::Result;
use crate::ideal::{minimal_nonfaces, SimplicialComplex};
use crate::linalg::PrimeField;
use rayon::prelude::*;
use std::collections::BTreeMap;

/// Betti numbers of `S/I_Δ` for `Δ = Δ_<(G)`, refined to [`FineDegree`]s.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FineBetti {
    pub n: usize,
    pub field_char: u32,
    pub entries: BTreeMap<(usize, FineDegree), u64>,
}

impl FineBetti {
    pub fn coarse(&self) -> BettiTable {
        let mut t = BettiTable::new(2 * self.n, self.field_char);
        for ((i, d), &v) in &self.entries {
            t.add(*i, d.total(), v);
        }
        t
    }

    /// Fine degrees carrying a nonzero entry at coarse position `(i, j)`.
    pub fn degrees_at(&self, i: usize, j: usize) -> Vec<FineDegree> {
        self.entries.keys().filter(|(ii, d)| *ii == i && d.total() == j).map(|(_, d)| d.clone()).collect()
    }
}

/// `(i, W, β_{i,W})` for every squarefree multidegree `W` with a nonzero
/// entry, via `β_{i,W} = dim H̃_{|W|-i-1}(Δ_W)`.
fn hochster_by_subset(delta: &SimplicialComplex, field: PrimeField) -> Vec<(usize, u32, u64)> {
    let ground = delta.ground_size();
    let gens = minimal_nonfaces(delta);
    let all: u32 = if ground == 32 { u32::MAX } else { (1u32 << ground) - 1 };
    // Only unions of minimal nonfaces can carry homology: any vertex of W in
    // no nonface inside W is a cone point of Δ_W.
    let mut out: Vec<(usize, u32, u64)> = (1..=all as u64)
        .into_par_iter()
        .map(|w| w as u32)
        .filter(|&w| gens.iter().filter(|&&g| g & w == g).fold(0, |acc, &g| acc | g) == w)
        .flat_map_iter(|w| {
            let h = homology_of_facets(&delta.restriction_facets(w), field);
            let size = w.count_ones() as isize;
            h.nonzero().map(|(dim, r)| ((size - dim - 1) as usize, w, r as u64)).collect::<Vec<_>>()
        })
        .collect();
    out.push((0, 0, 1));
    out.sort_unstable();
    out
}

/// Graded Betti table of `S/I_Δ` by Hochster's formula.
pub fn hochster_betti(delta: &SimplicialComplex, p: u32) -> Result<BettiTable> {
    let field = PrimeField::new(p)?;
    let mut t = BettiTable::new(delta.ground_size(), p);
    for (i, w, v) in hochster_by_subset(delta, field) {
        t.add(i, w.count_ones() as usize, v);
    }
    Ok(t)
}

/// Fine-graded version for a complex on the labels `x1..xn, y1..yn`.
pub fn hochster_fine(delta: &SimplicialComplex, p: u32) -> Result<FineBetti> {
    let field = PrimeField::new(p)?;
    let n = delta.ground_size() / 2;
    let mut entries = BTreeMap::new();
    for (i, w, v) in hochster_by_subset(delta, field) {
        *entries.entry((i, FineDegree::of_support(w, n))).or_insert(0) += v;
    }
    Ok(FineBetti { n, field_char: p, entries })
}
