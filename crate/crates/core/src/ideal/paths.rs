use super::{Monomial, Variable};
use crate::error::{Error, Result};
use crate::graphs::{Graph, VertexSet};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CutSet {
    pub vertices: VertexSet,
    pub component_count: usize,
}

/// Every `T ⊆ [n]` (including `∅`) such that deleting any single `v ∈ T`
/// from `T` strictly lowers the number of components of `G \ T`.
pub fn cut_sets(g: &Graph) -> Result<Vec<CutSet>> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    if g.n() > super::MAX_IDEAL_VERTICES {
        return Err(Error::InvalidParameter(format!("cut-set enumeration needs n <= 12, got {}", g.n())));
    }
    Ok(cut_sets_unchecked(g))
}

/// Cut sets without the connectivity requirement; for a disconnected graph
/// these are the unions of per-component cut sets.
pub(crate) fn cut_sets_unchecked(g: &Graph) -> Vec<CutSet> {
    let n = g.n();
    assert!(n <= super::MAX_IDEAL_VERTICES, "at most 12 vertices supported");
    let counts: Vec<usize> = (0..1u64 << n).map(|t| g.component_count(VertexSet(t))).collect();
    let mut out = Vec::new();
    for t in 0..1u64 << n {
        let c = counts[t as usize];
        if VertexSet(t).iter().all(|v| counts[(t & !(1u64 << (v - 1))) as usize] < c) {
            out.push(CutSet { vertices: VertexSet(t), component_count: c });
        }
    }
    out
}

/// A path `(i, i_1, ..., i_{r-1}, j)` with `i < j`, interior vertices all
/// outside `[i, j]`, and no proper subset of the interior connecting `i` to `j`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AdmissiblePath {
    pub vertices: Vec<usize>,
}

impl AdmissiblePath {
    pub fn start(&self) -> usize {
        self.vertices[0]
    }

    pub fn end(&self) -> usize {
        *self.vertices.last().unwrap()
    }

    pub fn interior(&self) -> &[usize] {
        &self.vertices[1..self.vertices.len() - 1]
    }

    pub fn len(&self) -> usize {
        self.vertices.len() - 1
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// `u_π = Π_{i_k > j} x_{i_k} · Π_{i_l < i} y_{i_l}`.
    pub fn u_pi(&self, n: usize) -> Monomial {
        let (i, j) = (self.start(), self.end());
        let vars: Vec<Variable> = self
            .interior()
            .iter()
            .map(|&v| {
                if v > j {
                    Variable::x(v)
                } else {
                    debug_assert!(v < i);
                    Variable::y(v)
                }
            })
            .collect();
        Monomial::from_vars(n, &vars)
    }
}

/// True iff `i` and `j` are joined inside `G[{i, j} ∪ allowed]`.
fn connects(g: &Graph, i: usize, j: usize, allowed: VertexSet) -> bool {
    let alive = allowed.union(VertexSet::from_vertices([i, j]));
    g.components_within(alive).iter().any(|c| c.contains(i) && c.contains(j))
}

/// Condition (3): no proper subset of the interior carries a path from `i`
/// to `j`. Since path existence is monotone in the allowed vertex set, it
/// suffices to drop one interior vertex at a time.
fn is_minimal(g: &Graph, path: &[usize]) -> bool {
    let (i, j) = (path[0], *path.last().unwrap());
    let interior: VertexSet = path[1..path.len() - 1].iter().copied().collect();
    if interior.is_empty() {
        return g.has_edge(i, j);
    }
    interior.iter().all(|w| !connects(g, i, j, interior.difference(VertexSet::singleton(w))))
}

pub fn admissible_paths(g: &Graph) -> Vec<AdmissiblePath> {
    let n = g.n();
    let mut out = Vec::new();
    for i in 1..=n {
        for j in i + 1..=n {
            // Interior vertices must lie outside [i, j].
            let outside: u64 = VertexSet::full(n).0 & !(((1u64 << j) - 1) & !((1u64 << (i - 1)) - 1));
            let mut path = vec![i];
            dfs(g, j, outside, &mut path, 1u64 << (i - 1), &mut out);
        }
    }
    out.sort();
    out
}

fn dfs(g: &Graph, j: usize, outside: u64, path: &mut Vec<usize>, used: u64, out: &mut Vec<AdmissiblePath>) {
    let end = *path.last().unwrap();
    let before_end = used & !(1u64 << (end - 1));
    // Admissible paths are induced, so j may only touch the current end.
    if g.has_edge(end, j) && g.row(j) & before_end == 0 {
        path.push(j);
        if is_minimal(g, path) {
            out.push(AdmissiblePath { vertices: path.clone() });
        }
        path.pop();
    }
    if g.has_edge(end, j) {
        // Extending further would leave a chord to j from a non-final vertex.
        return;
    }
    let mut cand = g.row(end) & outside & !used;
    while cand != 0 {
        let w = cand.trailing_zeros() as usize + 1;
        cand &= cand - 1;
        if g.row(w) & before_end != 0 {
            continue;
        }
        path.push(w);
        dfs(g, j, outside, path, used | 1u64 << (w - 1), out);
        path.pop();
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphs::build_fm;

    fn sets(cs: &[CutSet]) -> Vec<Vec<usize>> {
        cs.iter().map(|c| c.vertices.to_vec()).collect()
    }

    /// Brute-force oracle straight from the definition, over all subsets.
    fn cut_sets_oracle(g: &Graph) -> Vec<Vec<usize>> {
        let n = g.n();
        let c = |t: u64| g.components(VertexSet(t)).len();
        (0..1u64 << n)
            .filter(|&t| (1..=n).filter(|&v| t >> (v - 1) & 1 == 1).all(|v| c(t & !(1 << (v - 1))) < c(t)))
            .map(|t| VertexSet(t).to_vec())
            .collect()
    }

    #[test]
    fn cut_sets_of_small_graphs() {
        assert_eq!(sets(&cut_sets(&Graph::path(3)).unwrap()), vec![vec![], vec![2]]);
        assert_eq!(sets(&cut_sets(&Graph::complete(3)).unwrap()), vec![Vec::<usize>::new()]);
        // {2,3} is not a cut set of P_4: dropping 2 leaves two components.
        assert_eq!(sets(&cut_sets(&Graph::path(4)).unwrap()), vec![vec![], vec![2], vec![3]]);
        for g in [Graph::path(3), Graph::complete(3), Graph::path(4), Graph::cycle(5), build_fm(3).unwrap()] {
            assert_eq!(sets(&cut_sets(&g).unwrap()), cut_sets_oracle(&g));
        }
        assert_eq!(cut_sets(&Graph::empty(2)), Err(Error::Disconnected));
    }

    #[test]
    fn admissible_paths_small() {
        let k3: Vec<Vec<usize>> = admissible_paths(&Graph::complete(3)).into_iter().map(|p| p.vertices).collect();
        assert_eq!(k3, vec![vec![1, 2], vec![1, 3], vec![2, 3]]);
        let p3: Vec<Vec<usize>> = admissible_paths(&Graph::path(3)).into_iter().map(|p| p.vertices).collect();
        assert_eq!(p3, vec![vec![1, 2], vec![2, 3]]);
        // (1,3,2) on the labelling 1-3-2 is admissible: 3 > 2 is outside [1,2].
        let g = Graph::from_edges(3, &[(1, 3), (3, 2)]).unwrap();
        let ps: Vec<Vec<usize>> = admissible_paths(&g).into_iter().map(|p| p.vertices).collect();
        assert_eq!(ps, vec![vec![1, 3], vec![1, 3, 2], vec![2, 3]]);
    }

    #[test]
    fn fm_admissible_paths_are_short() {
        for m in 3..=6 {
            let f = build_fm(m).unwrap();
            assert!(admissible_paths(&f).iter().all(|p| p.len() <= 3), "m = {m}");
        }
    }

    #[test]
    fn u_pi_uses_x_above_and_y_below() {
        let p = AdmissiblePath { vertices: vec![3, 1, 5, 4] };
        assert_eq!(p.u_pi(5).to_string(), "x5*y1");
    }
}
