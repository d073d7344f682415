//! Canonical labelling by colour refinement plus individualisation.
//!
//! The search explores every branch of the individualisation tree except
//! those related by a twin transposition (two vertices of the target cell
//! with equal neighbourhoods up to each other), which is an automorphism
//! fixing the current partition. The canonical word is the least graph6
//! word over all leaves.

use super::{emit_graph6, Graph};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CanonicalForm {
    /// `labeling[v - 1]` is the canonical label of vertex `v`.
    pub labeling: Vec<usize>,
    pub word: String,
}

impl CanonicalForm {
    pub fn graph(&self) -> Graph {
        super::parse_graph6(&self.word).expect("canonical words are valid graph6")
    }
}

type Partition = Vec<Vec<usize>>;

fn refine(g: &Graph, mut cells: Partition) -> Partition {
    let n = g.n();
    let mut cell_of = vec![0usize; n];
    loop {
        for (c, cell) in cells.iter().enumerate() {
            for &v in cell {
                cell_of[v] = c;
            }
        }
        let k = cells.len();
        let mut next: Partition = Vec::with_capacity(n);
        for cell in &cells {
            if cell.len() == 1 {
                next.push(cell.clone());
                continue;
            }
            let mut keyed: Vec<(Vec<u8>, usize)> = cell
                .iter()
                .map(|&v| {
                    let mut sig = vec![0u8; k];
                    let mut row = g.row(v + 1);
                    while row != 0 {
                        let w = row.trailing_zeros() as usize;
                        row &= row - 1;
                        sig[cell_of[w]] += 1;
                    }
                    (sig, v)
                })
                .collect();
            keyed.sort();
            let mut start = 0;
            for i in 1..=keyed.len() {
                if i == keyed.len() || keyed[i].0 != keyed[start].0 {
                    next.push(keyed[start..i].iter().map(|&(_, v)| v).collect());
                    start = i;
                }
            }
        }
        if next.len() == cells.len() {
            return next;
        }
        cells = next;
    }
}

fn are_twins(g: &Graph, u: usize, w: usize) -> bool {
    let mu = 1u64 << u;
    let mw = 1u64 << w;
    (g.row(u + 1) & !mw) == (g.row(w + 1) & !mu)
}

struct Search<'a> {
    g: &'a Graph,
    best: Option<(String, Vec<usize>)>,
}

impl Search<'_> {
    fn visit(&mut self, cells: Partition) {
        let cells = refine(self.g, cells);
        let Some(target) = cells.iter().position(|c| c.len() > 1) else {
            let mut labeling = vec![0usize; self.g.n()];
            for (k, cell) in cells.iter().enumerate() {
                labeling[cell[0]] = k + 1;
            }
            let word = emit_graph6(&self.g.relabel(&labeling));
            if self.best.as_ref().is_none_or(|(w, _)| word < *w) {
                self.best = Some((word, labeling));
            }
            return;
        };
        let cell = &cells[target];
        let mut reps: Vec<usize> = Vec::new();
        for &v in cell {
            if !reps.iter().any(|&r| are_twins(self.g, r, v)) {
                reps.push(v);
            }
        }
        for v in reps {
            let mut child = cells.clone();
            let rest: Vec<usize> = cell.iter().copied().filter(|&w| w != v).collect();
            child.splice(target..=target, [vec![v], rest]);
            self.visit(child);
        }
    }
}

pub fn canonical_form(g: &Graph) -> CanonicalForm {
    if g.n() == 0 {
        return CanonicalForm { labeling: vec![], word: emit_graph6(g) };
    }
    let mut search = Search { g, best: None };
    search.visit(vec![(0..g.n()).collect()]);
    let (word, labeling) = search.best.expect("search visits at least one leaf");
    CanonicalForm { labeling, word }
}

pub fn canonical_word(g: &Graph) -> String {
    canonical_form(g).word
}
