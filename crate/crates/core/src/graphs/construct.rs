//! Graph operations and the families built from them: cones, joins, the
//! bipartite blocks `F_m`, the regularity-2 cones `H_i`, the regularity-3
//! cones `G_i^1`, `G_i^2`, and `∘`-chains of `F_m` blocks.

use super::{Graph, VertexSet};
use crate::error::{Error, Result};

pub fn disjoint_union(g1: &Graph, g2: &Graph) -> Graph {
    let n1 = g1.n();
    let mut g = Graph::empty(n1 + g2.n());
    for (u, v) in g1.edges() {
        g.add_edge(u, v);
    }
    for (u, v) in g2.edges() {
        g.add_edge(u + n1, v + n1);
    }
    g
}

/// `G_1 * G_2`: labels of `g2` are shifted by `|V(G_1)|` and every cross pair is joined.
pub fn join(g1: &Graph, g2: &Graph) -> Graph {
    let n1 = g1.n();
    let mut g = disjoint_union(g1, g2);
    for u in 1..=n1 {
        for v in 1..=g2.n() {
            g.add_edge(u, n1 + v);
        }
    }
    g
}

/// `cone(v, G)`: adds the fresh vertex `v = n + 1` adjacent to everything.
pub fn cone(v: usize, g: &Graph) -> Result<Graph> {
    if v >= 1 && v <= g.n() {
        return Err(Error::VertexPresent(v));
    }
    if v != g.n() + 1 {
        return Err(Error::InvalidParameter(format!("cone vertex must be the next label {}, got {v}", g.n() + 1)));
    }
    Ok(join(g, &Graph::empty(1)))
}

/// `G_v`: adds every edge between neighbours of `v`.
pub fn neighborhood_completion(g: &Graph, v: usize) -> Result<Graph> {
    if v == 0 || v > g.n() {
        return Err(Error::VertexOutOfRange { vertex: v, n: g.n() });
    }
    let mut out = g.clone();
    let nb = g.neighbors(v).to_vec();
    for (a, &p) in nb.iter().enumerate() {
        for &q in &nb[a + 1..] {
            out.add_edge(p, q);
        }
    }
    Ok(out)
}

/// `F_m` on `[2m]` with edges `{i, i+1}` and `{2i, 2j+3}` for `1 <= i <= j <= m-2`.
pub fn build_fm(m: usize) -> Result<Graph> {
    if m == 0 {
        return Err(Error::InvalidParameter("F_m needs m >= 1".into()));
    }
    let mut g = Graph::path(2 * m);
    for i in 1..=m.saturating_sub(2) {
        for j in i..=m - 2 {
            g.add_edge(2 * i, 2 * j + 3);
        }
    }
    Ok(g)
}

fn cone_family(base: Graph, i: usize) -> Result<Graph> {
    if i == 0 {
        return Err(Error::InvalidParameter("family index i must be >= 1".into()));
    }
    let mut g = join(&base, &Graph::empty(1));
    for _ in 2..=i {
        let with_isolated = disjoint_union(&Graph::empty(1), &g);
        g = join(&with_isolated, &Graph::empty(1));
    }
    Ok(g)
}

/// `H_i` built from `H_0 = K_r ⊔ K_s`: `H_1 = K_1 * H_0`,
/// `H_i = K_1 * (K_1 ⊔ H_{i-1})`.
pub fn build_hi(r: usize, s: usize, i: usize) -> Result<Graph> {
    if r == 0 || r > s {
        return Err(Error::InvalidParameter(format!("H_i needs 1 <= r <= s, got r={r} s={s}")));
    }
    cone_family(disjoint_union(&Graph::complete(r), &Graph::complete(s)), i)
}

/// `G_i^1`, starting from `G_0^1 = P_1 ⊔ P_4`.
pub fn build_g1(i: usize) -> Result<Graph> {
    cone_family(disjoint_union(&Graph::path(1), &Graph::path(4)), i)
}

/// `G_i^2`, starting from `G_0^2 = P_2 ⊔ P_3`.
pub fn build_g2(i: usize) -> Result<Graph> {
    cone_family(disjoint_union(&Graph::path(2), &Graph::path(3)), i)
}

/// `(G_1, u_1) ∘ (G_2, u_2)`: deletes the leaves `u_1`, `u_2` and identifies
/// their neighbours.
///
/// The result lists `G_1 \ u_1` first (order preserved), then `G_2 \ {u_2, v_2}`
/// (order preserved); `v_2` is merged into the image of `v_1`.
pub fn circ(g1: &Graph, u1: usize, g2: &Graph, u2: usize) -> Result<Graph> {
    let v1 = leaf_anchor(g1, u1)?;
    let v2 = leaf_anchor(g2, u2)?;
    let (left, left_map) = g1.remove_vertices(VertexSet::singleton(u1));
    let (right_rest, right_map) = g2.remove_vertices(VertexSet::from_vertices([u2, v2]));
    let n1 = left.n();
    let anchor = left_map.iter().position(|&x| x == v1).unwrap() + 1;
    let mut g = disjoint_union(&left, &right_rest);
    for w in g2.neighbors(v2).iter() {
        if w == u2 {
            continue;
        }
        let k = right_map.iter().position(|&x| x == w).unwrap() + 1;
        g.add_edge(anchor, n1 + k);
    }
    Ok(g)
}

fn leaf_anchor(g: &Graph, u: usize) -> Result<usize> {
    if u == 0 || u > g.n() {
        return Err(Error::LeafDegree(format!("vertex {u} not in graph")));
    }
    if g.degree(u) != 1 {
        return Err(Error::LeafDegree(format!("vertex {u} is not a leaf")));
    }
    let v = g.neighbors(u).first().unwrap();
    if g.degree(v) < 3 {
        return Err(Error::LeafDegree(format!("neighbour {v} of leaf {u} has degree {} < 3", g.degree(v))));
    }
    Ok(v)
}

/// `F_{m_1} ∘ ... ∘ F_{m_t}`, gluing the highest-label leaf of the left
/// factor to leaf `1` of the next `F_m`.
pub fn chain(ms: &[usize]) -> Result<Graph> {
    let (&first, rest) =
        ms.split_first().ok_or_else(|| Error::InvalidParameter("chain needs at least one factor".into()))?;
    if rest.is_empty() {
        return build_fm(first);
    }
    if let Some(&m) = ms.iter().find(|&&m| m < 3) {
        return Err(Error::InvalidParameter(format!("chain factors need m >= 3, got {m}")));
    }
    let mut g = build_fm(first)?;
    for &m in rest {
        let leaf = (1..=g.n())
            .rev()
            .find(|&v| g.degree(v) == 1)
            .ok_or_else(|| Error::LeafDegree("left factor has no leaf".into()))?;
        g = circ(&g, leaf, &build_fm(m)?, 1)?;
    }
    Ok(g)
}
