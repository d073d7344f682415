use super::{canonical_word, Graph, VertexSet};

/// An indecomposable piece together with its vertex map into the parent.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Piece {
    pub graph: Graph,
    /// `map[k - 1]` is the parent label of piece vertex `k`.
    pub map: Vec<usize>,
    pub word: String,
}

impl Piece {
    pub fn vertex_set(&self) -> VertexSet {
        self.map.iter().copied().collect()
    }
}

/// Maximal decomposition of a connected graph into indecomposable pieces
/// glued pairwise at vertices simplicial in both sides.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decomposition {
    /// Pieces in canonical-word order.
    pub pieces: Vec<Piece>,
    /// Parent labels at which a gluing happened, one entry per gluing, sorted.
    pub glue_vertices: Vec<usize>,
}

impl Decomposition {
    pub fn is_indecomposable(&self) -> bool {
        self.pieces.len() == 1
    }

    /// Rebuilds the parent's edge set from the pieces.
    pub fn reassemble(&self, n: usize) -> Graph {
        let mut g = Graph::empty(n);
        for p in &self.pieces {
            for (u, v) in p.graph.edges() {
                g.add_edge(p.map[u - 1], p.map[v - 1]);
            }
        }
        g
    }
}

fn find_split(g: &Graph, set: VertexSet) -> Option<(usize, VertexSet, VertexSet)> {
    for v in set.iter() {
        let rest = set.difference(VertexSet::singleton(v));
        let comps = g.components_within(rest);
        if comps.len() < 2 {
            continue;
        }
        let nv = g.neighbors(v);
        // Component 0 always goes to side A so each bipartition is tried once.
        for mask in 0u64..(1u64 << (comps.len() - 1)) {
            let mut a = comps[0];
            let mut b = VertexSet::EMPTY;
            for (k, c) in comps.iter().enumerate().skip(1) {
                if mask >> (k - 1) & 1 == 1 {
                    a = a.union(*c);
                } else {
                    b = b.union(*c);
                }
            }
            if b.is_empty() {
                continue;
            }
            if g.is_clique(nv.intersection(a)) && g.is_clique(nv.intersection(b)) {
                let single = VertexSet::singleton(v);
                return Some((v, a.union(single), b.union(single)));
            }
        }
    }
    None
}

fn split_all(g: &Graph, set: VertexSet, pieces: &mut Vec<VertexSet>, glue: &mut Vec<usize>) {
    match find_split(g, set) {
        Some((v, a, b)) => {
            glue.push(v);
            split_all(g, a, pieces, glue);
            split_all(g, b, pieces, glue);
        }
        None => pieces.push(set),
    }
}

/// Decomposes `g` (assumed connected) into indecomposable pieces.
pub fn decompose(g: &Graph) -> Decomposition {
    let mut sets = Vec::new();
    let mut glue = Vec::new();
    split_all(g, g.vertices(), &mut sets, &mut glue);
    let mut pieces: Vec<Piece> = sets
        .into_iter()
        .map(|s| {
            let (graph, map) = g.induced(s);
            let word = canonical_word(&graph);
            Piece { graph, map, word }
        })
        .collect();
    pieces.sort_by(|x, y| x.word.cmp(&y.word).then_with(|| x.map.cmp(&y.map)));
    glue.sort_unstable();
    Decomposition { pieces, glue_vertices: glue }
}

pub fn is_decomposable(g: &Graph) -> bool {
    find_split(g, g.vertices()).is_some()
}
