//! Simple undirected graphs on the vertex set `1..=n`.
//!
//! Adjacency is stored as one `u64` bit row per vertex, so every graph
//! handled here has at most 64 vertices (graph6 input is limited to 62).
//! Vertex labels are 1-based everywhere in the public API.

mod canon;
mod construct;
mod decompose;
mod graph6;

pub use canon::{canonical_form, canonical_word, CanonicalForm};
pub use construct::{
    build_fm, build_g1, build_g2, build_hi, chain, circ, cone, disjoint_union, join, neighborhood_completion,
};
pub use decompose::{decompose, is_decomposable, Decomposition, Piece};
pub use graph6::{emit_graph6, parse_adjacency_list, parse_graph, parse_graph6};

use crate::error::{Error, Result};
use std::collections::VecDeque;
use std::fmt;

pub const MAX_VERTICES: usize = 64;

/// A set of 1-based vertex labels packed into a bitmask.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct VertexSet(pub u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    pub fn full(n: usize) -> Self {
        if n == 64 {
            VertexSet(u64::MAX)
        } else {
            VertexSet((1u64 << n) - 1)
        }
    }

    pub fn singleton(v: usize) -> Self {
        VertexSet(1u64 << (v - 1))
    }

    pub fn from_vertices<I: IntoIterator<Item = usize>>(it: I) -> Self {
        VertexSet(it.into_iter().fold(0u64, |m, v| m | (1u64 << (v - 1))))
    }

    pub fn contains(self, v: usize) -> bool {
        (1..=64).contains(&v) && self.0 >> (v - 1) & 1 == 1
    }

    pub fn insert(&mut self, v: usize) {
        self.0 |= 1u64 << (v - 1);
    }

    pub fn remove(&mut self, v: usize) {
        self.0 &= !(1u64 << (v - 1));
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn union(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 | other.0)
    }

    pub fn intersection(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 & other.0)
    }

    pub fn difference(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 & !other.0)
    }

    pub fn is_subset(self, other: VertexSet) -> bool {
        self.0 & !other.0 == 0
    }

    /// Smallest label in the set.
    pub fn first(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize + 1)
    }

    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let v = bits.trailing_zeros() as usize + 1;
                bits &= bits - 1;
                Some(v)
            }
        })
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        VertexSet::from_vertices(iter)
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        assert!(n <= MAX_VERTICES, "at most {MAX_VERTICES} vertices supported");
        Graph { n, adj: vec![0; n] }
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Graph::empty(n);
        for v in 1..=n {
            g.adj[v - 1] = VertexSet::full(n).0 & !(1u64 << (v - 1));
        }
        g
    }

    /// `P_n` with edges `{i, i+1}`.
    pub fn path(n: usize) -> Self {
        let mut g = Graph::empty(n);
        for v in 1..n {
            g.add_edge(v, v + 1);
        }
        g
    }

    pub fn cycle(n: usize) -> Self {
        let mut g = Graph::path(n);
        if n >= 3 {
            g.add_edge(1, n);
        }
        g
    }

    pub fn star(leaves: usize) -> Self {
        let mut g = Graph::empty(leaves + 1);
        for v in 2..=leaves + 1 {
            g.add_edge(1, v);
        }
        g
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::empty(n);
        for &(u, v) in edges {
            g.check_vertex(u)?;
            g.check_vertex(v)?;
            if u == v {
                return Err(Error::InvalidParameter(format!("loop at vertex {u}")));
            }
            g.add_edge(u, v);
        }
        Ok(g)
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v == 0 || v > self.n {
            Err(Error::VertexOutOfRange { vertex: v, n: self.n })
        } else {
            Ok(())
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    pub fn add_edge(&mut self, u: usize, v: usize) {
        assert!(u != v && u >= 1 && v >= 1 && u <= self.n && v <= self.n);
        self.adj[u - 1] |= 1u64 << (v - 1);
        self.adj[v - 1] |= 1u64 << (u - 1);
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) {
        self.adj[u - 1] &= !(1u64 << (v - 1));
        self.adj[v - 1] &= !(1u64 << (u - 1));
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u - 1] >> (v - 1) & 1 == 1
    }

    pub fn neighbors(&self, v: usize) -> VertexSet {
        VertexSet(self.adj[v - 1])
    }

    pub(crate) fn row(&self, v: usize) -> u64 {
        self.adj[v - 1]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v - 1].count_ones() as usize
    }

    /// Edges `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 1..=self.n {
            for v in self.neighbors(u).iter() {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    pub fn complement(&self) -> Graph {
        let full = VertexSet::full(self.n).0;
        let adj = (0..self.n).map(|i| full & !self.adj[i] & !(1u64 << i)).collect();
        Graph { n: self.n, adj }
    }

    /// Induced subgraph on `keep`, relabelled `1..=|keep|` in increasing label
    /// order. The returned map sends new label `k` to `map[k - 1]` in `self`.
    pub fn induced(&self, keep: VertexSet) -> (Graph, Vec<usize>) {
        let map: Vec<usize> = keep.iter().filter(|&v| v <= self.n).collect();
        let mut g = Graph::empty(map.len());
        for (a, &u) in map.iter().enumerate() {
            for (b, &v) in map.iter().enumerate().skip(a + 1) {
                if self.has_edge(u, v) {
                    g.add_edge(a + 1, b + 1);
                }
            }
        }
        (g, map)
    }

    pub fn remove_vertices(&self, removed: VertexSet) -> (Graph, Vec<usize>) {
        self.induced(self.vertices().difference(removed))
    }

    /// Applies a relabelling: vertex `v` becomes `perm[v - 1]`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n);
        let mut g = Graph::empty(self.n);
        for (u, v) in self.edges() {
            g.add_edge(perm[u - 1], perm[v - 1]);
        }
        g
    }

    /// Connected components of the subgraph induced on `[n] \ removed`,
    /// each as a vertex set, ordered by smallest member.
    pub fn components(&self, removed: VertexSet) -> Vec<VertexSet> {
        self.components_within(self.vertices().difference(removed))
    }

    pub(crate) fn components_within(&self, alive: VertexSet) -> Vec<VertexSet> {
        let mut rest = alive.0;
        let mut out = Vec::new();
        while rest != 0 {
            let start = rest & rest.wrapping_neg();
            let mut comp = start;
            let mut frontier = start;
            while frontier != 0 {
                let mut next = 0u64;
                let mut f = frontier;
                while f != 0 {
                    let i = f.trailing_zeros() as usize;
                    f &= f - 1;
                    next |= self.adj[i];
                }
                next &= alive.0 & !comp;
                comp |= next;
                frontier = next;
            }
            rest &= !comp;
            out.push(VertexSet(comp));
        }
        out
    }

    /// Number of components after deleting `removed`; `c(T)` in the cut-set condition.
    pub fn component_count(&self, removed: VertexSet) -> usize {
        self.components(removed).len()
    }

    pub fn is_connected(&self) -> bool {
        self.n <= 1 || self.components(VertexSet::EMPTY).len() == 1
    }

    pub fn cut_vertices(&self) -> VertexSet {
        let base = self.component_count(VertexSet::EMPTY);
        (1..=self.n).filter(|&v| self.component_count(VertexSet::singleton(v)) > base).collect()
    }

    pub fn is_clique(&self, set: VertexSet) -> bool {
        set.iter().all(|v| set.difference(VertexSet::singleton(v)).is_subset(self.neighbors(v)))
    }

    /// Vertices lying in exactly one maximal clique, i.e. whose neighbourhood is a clique.
    pub fn simplicial_vertices(&self) -> VertexSet {
        (1..=self.n).filter(|&v| self.is_clique(self.neighbors(v))).collect()
    }

    pub fn is_simplicial(&self, v: usize) -> bool {
        self.is_clique(self.neighbors(v))
    }

    /// Breadth-first distances from `src`; `None` for unreachable vertices.
    pub fn distances(&self, src: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.n];
        dist[src - 1] = Some(0);
        let mut queue = VecDeque::from([src]);
        while let Some(u) = queue.pop_front() {
            let du = dist[u - 1].unwrap();
            for v in self.neighbors(u).iter() {
                if dist[v - 1].is_none() {
                    dist[v - 1] = Some(du + 1);
                    queue.push_back(v);
                }
            }
        }
        dist
    }

    pub fn diameter(&self) -> Result<usize> {
        let mut best = 0;
        for v in 1..=self.n {
            for d in self.distances(v) {
                best = best.max(d.ok_or(Error::Disconnected)?);
            }
        }
        Ok(best)
    }

    pub fn is_bipartite(&self) -> bool {
        let mut side = vec![None::<bool>; self.n];
        for s in 1..=self.n {
            if side[s - 1].is_some() {
                continue;
            }
            side[s - 1] = Some(false);
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                let su = side[u - 1].unwrap();
                for v in self.neighbors(u).iter() {
                    match side[v - 1] {
                        None => {
                            side[v - 1] = Some(!su);
                            queue.push_back(v);
                        }
                        Some(sv) if sv == su => return false,
                        _ => {}
                    }
                }
            }
        }
        true
    }

    pub fn is_complete(&self) -> bool {
        self.edge_count() == self.n * self.n.saturating_sub(1) / 2
    }

    /// True iff the graph is isomorphic to `P_n`.
    pub fn is_path(&self) -> bool {
        match self.n {
            0 => false,
            1 => true,
            n => self.is_connected() && self.edge_count() == n - 1 && (1..=n).all(|v| self.degree(v) <= 2),
        }
    }

    pub fn universal_vertices(&self) -> VertexSet {
        (1..=self.n).filter(|&v| self.degree(v) + 1 == self.n).collect()
    }

    /// True iff `G = cone(v, H_1 ⊔ H_2)`: some vertex is adjacent to all
    /// others and deleting it disconnects the rest.
    pub fn is_cone(&self) -> bool {
        self.universal_vertices().iter().any(|v| self.component_count(VertexSet::singleton(v)) >= 2)
    }

    pub fn isolated_vertices(&self) -> VertexSet {
        (1..=self.n).filter(|&v| self.degree(v) == 0).collect()
    }

    /// True iff no induced subgraph is isomorphic to `P_k`.
    pub fn is_pk_free(&self, k: usize) -> bool {
        assert!(k >= 2, "is_pk_free requires k >= 2");
        if k > self.n {
            return true;
        }
        // Extend induced paths one vertex at a time; a new vertex must be
        // adjacent to the current end and to no other path vertex.
        fn extend(g: &Graph, path: &mut Vec<usize>, used: u64, k: usize) -> bool {
            if path.len() == k {
                return true;
            }
            let end = *path.last().unwrap();
            let interior = used & !(1u64 << (end - 1));
            let mut cand = g.row(end) & !used;
            while cand != 0 {
                let w = cand.trailing_zeros() as usize + 1;
                cand &= cand - 1;
                if g.row(w) & interior != 0 {
                    continue;
                }
                path.push(w);
                if extend(g, path, used | 1u64 << (w - 1), k) {
                    return true;
                }
                path.pop();
            }
            false
        }
        for s in 1..=self.n {
            let mut path = vec![s];
            if extend(self, &mut path, 1u64 << (s - 1), k) {
                return false;
            }
        }
        true
    }

    pub fn is_dominating(&self, set: VertexSet) -> bool {
        let mut covered = set.0;
        for v in set.iter() {
            covered |= self.adj[v - 1];
        }
        covered & VertexSet::full(self.n).0 == VertexSet::full(self.n).0
    }

    pub fn is_connected_subset(&self, set: VertexSet) -> bool {
        !set.is_empty() && self.components_within(set).len() == 1
    }

    /// All connected dominating sets of minimum cardinality, in increasing
    /// bitmask order.
    pub fn min_connected_dominating_sets(&self) -> Result<Vec<VertexSet>> {
        if !self.is_connected() {
            return Err(Error::Disconnected);
        }
        if self.n == 0 {
            return Ok(vec![]);
        }
        for size in 1..=self.n {
            let found: Vec<VertexSet> = subsets_of_size(self.n, size)
                .map(VertexSet)
                .filter(|&s| self.is_dominating(s) && self.is_connected_subset(s))
                .collect();
            if !found.is_empty() {
                let mut found = found;
                found.sort();
                return Ok(found);
            }
        }
        unreachable!("the full vertex set dominates a connected graph")
    }
}

/// All `size`-element subsets of the low `n` bits, in increasing order.
pub(crate) fn subsets_of_size(n: usize, size: usize) -> impl Iterator<Item = u64> {
    let limit: u64 = if n == 64 { u64::MAX } else { 1u64 << n };
    let mut cur: Option<u64> = if size > n {
        None
    } else if size == 0 {
        Some(0)
    } else {
        Some((1u64 << size) - 1)
    };
    std::iter::from_fn(move || {
        let out = cur?;
        if out == 0 {
            cur = None;
            return Some(0);
        }
        // Gosper's hack for the next subset of the same size.
        let c = out & out.wrapping_neg();
        let r = out.wrapping_add(c);
        let next = (((r ^ out) >> 2) / c) | r;
        cur = if r == 0 || next >= limit { None } else { Some(next) };
        Some(out)
    })
}
