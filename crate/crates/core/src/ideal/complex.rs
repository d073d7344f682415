use super::{cut_sets_unchecked, Variable};
use crate::graphs::Graph;
use std::collections::HashSet;
use std::fmt;

/// A simplicial complex on at most 32 labeled ground elements, stored by its
/// facets as bitmasks over ground positions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialComplex {
    pub labels: Vec<String>,
    /// Maximal faces, sorted by (size, mask).
    pub facets: Vec<u32>,
}

fn maximal(mut sets: Vec<u32>) -> Vec<u32> {
    sets.sort_by_key(|&s| (std::cmp::Reverse(s.count_ones()), s));
    sets.dedup();
    let mut out: Vec<u32> = Vec::new();
    for s in sets {
        if !out.iter().any(|&f| f & s == s) {
            out.push(s);
        }
    }
    out.sort_by_key(|&s| (s.count_ones(), s));
    out
}

impl SimplicialComplex {
    /// Builds a complex from generating faces; contained faces are dropped.
    pub fn new(labels: Vec<String>, faces: Vec<u32>) -> Self {
        assert!(labels.len() <= 32, "ground set too large");
        SimplicialComplex { labels, facets: maximal(faces) }
    }

    pub fn ground_size(&self) -> usize {
        self.labels.len()
    }

    /// Largest facet size; `dim + 1` in the topological convention.
    pub fn max_facet_size(&self) -> usize {
        self.facets.iter().map(|f| f.count_ones() as usize).max().unwrap_or(0)
    }

    pub fn is_pure(&self) -> bool {
        self.facets.windows(2).all(|w| w[0].count_ones() == w[1].count_ones())
    }

    pub fn contains_face(&self, s: u32) -> bool {
        self.facets.iter().any(|&f| f & s == s)
    }

    /// Facets of the restriction `Δ_W`.
    pub fn restriction_facets(&self, w: u32) -> Vec<u32> {
        maximal(self.facets.iter().map(|&f| f & w).collect())
    }

    pub fn restrict(&self, w: u32) -> SimplicialComplex {
        SimplicialComplex { labels: self.labels.clone(), facets: self.restriction_facets(w) }
    }

    /// All faces, including the empty face.
    pub fn faces(&self) -> Vec<u32> {
        all_faces(&self.facets)
    }

    pub fn format_set(&self, s: u32) -> String {
        let names: Vec<&str> =
            (0..self.labels.len()).filter(|&p| s >> p & 1 == 1).map(|p| self.labels[p].as_str()).collect();
        format!("{{{}}}", names.join(","))
    }
}

impl fmt::Display for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &facet in &self.facets {
            writeln!(f, "{}", self.format_set(facet))?;
        }
        Ok(())
    }
}

/// Every subset of every facet, sorted by (size, mask).
pub(crate) fn all_faces(facets: &[u32]) -> Vec<u32> {
    let mut seen: HashSet<u32> = HashSet::new();
    for &f in facets {
        // Enumerate submasks of f.
        let mut s = f;
        loop {
            seen.insert(s);
            if s == 0 {
                break;
            }
            s = (s - 1) & f;
        }
    }
    let mut out: Vec<u32> = seen.into_iter().collect();
    out.sort_by_key(|&s| (s.count_ones(), s));
    out
}

/// Ground labels `x1..xn, y1..yn` in monomial-order position.
pub fn variable_labels(n: usize) -> Vec<String> {
    (0..2 * n).map(|p| Variable::from_position(p, n).to_string()).collect()
}

/// Facets `F(T, v)` of the complex whose face ideal is `in(J_G)`.
///
/// Within each component of `G \ T`, listed in increasing label order, the
/// chosen vertex `v_i` contributes `y_j` for `j <= v_i` and `x_j` for `j >= v_i`.
pub fn stanley_reisner_complex(g: &Graph) -> SimplicialComplex {
    let n = g.n();
    let mut faces = Vec::new();
    for t in cut_sets_unchecked(g) {
        let comps = g.components(t.vertices);
        // Per-component options, then their cartesian product.
        let options: Vec<Vec<u32>> = comps
            .iter()
            .map(|c| {
                c.iter()
                    .map(|v| {
                        c.iter().fold(0u32, |acc, j| {
                            let mut acc = acc;
                            if j <= v {
                                acc |= 1 << Variable::y(j).position(n);
                            }
                            if j >= v {
                                acc |= 1 << Variable::x(j).position(n);
                            }
                            acc
                        })
                    })
                    .collect()
            })
            .collect();
        let mut partial = vec![0u32];
        for opts in &options {
            partial = partial.iter().flat_map(|&p| opts.iter().map(move |&o| p | o)).collect();
        }
        faces.extend(partial);
    }
    SimplicialComplex::new(variable_labels(n), faces)
}

/// Inclusion-minimal non-faces, sorted by (size, mask).
pub fn minimal_nonfaces(delta: &SimplicialComplex) -> Vec<u32> {
    let ground = delta.ground_size();
    let mut out = Vec::new();
    let mut level: HashSet<u32> = HashSet::from([0u32]);
    while !level.is_empty() {
        let mut next: HashSet<u32> = HashSet::new();
        let mut cands: Vec<u32> = Vec::new();
        for &s in &level {
            let top = if s == 0 { 0 } else { 32 - s.leading_zeros() as usize };
            for e in top..ground {
                cands.push(s | 1 << e);
            }
        }
        cands.sort_unstable();
        cands.dedup();
        for c in cands {
            // Every facet of the boundary must be a face.
            let mut rest = c;
            let mut all_faces = true;
            while rest != 0 {
                let b = rest & rest.wrapping_neg();
                rest &= rest - 1;
                if !level.contains(&(c & !b)) {
                    all_faces = false;
                    break;
                }
            }
            if !all_faces {
                continue;
            }
            if delta.contains_face(c) {
                next.insert(c);
            } else {
                out.push(c);
            }
        }
        level = next;
    }
    out.sort_by_key(|&s| (s.count_ones(), s));
    out
}

/// The complex of cliques of `g`, on ground labels `1..n`.
pub fn clique_complex(g: &Graph) -> SimplicialComplex {
    let mut cliques = Vec::new();
    bron_kerbosch(g, 0, g.vertices().0, 0, &mut cliques);
    let labels = (1..=g.n()).map(|v| v.to_string()).collect();
    SimplicialComplex::new(labels, cliques.into_iter().map(|c| c as u32).collect())
}

fn bron_kerbosch(g: &Graph, r: u64, mut p: u64, mut x: u64, out: &mut Vec<u64>) {
    if p == 0 && x == 0 {
        out.push(r);
        return;
    }
    while p != 0 {
        let v = p.trailing_zeros() as usize + 1;
        let bit = 1u64 << (v - 1);
        let nv = g.row(v);
        bron_kerbosch(g, r | bit, p & nv, x & nv, out);
        p &= !bit;
        x |= bit;
    }
}

/// `f_i` = number of faces of dimension `i` (so `f_0` counts vertices);
/// the empty face is not counted.
pub fn f_vector(delta: &SimplicialComplex) -> Vec<usize> {
    let mut f = vec![0usize; delta.max_facet_size()];
    for s in delta.faces() {
        if s != 0 {
            f[s.count_ones() as usize - 1] += 1;
        }
    }
    f
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphs::build_fm;
    use crate::ideal::initial_ideal;

    fn facet_strings(d: &SimplicialComplex) -> Vec<String> {
        let mut v: Vec<String> = d.facets.iter().map(|&f| d.format_set(f)).collect();
        v.sort();
        v
    }

    /// Oracle: minimal nonfaces by scanning every ground subset.
    fn brute_minimal_nonfaces(d: &SimplicialComplex) -> Vec<u32> {
        let g = d.ground_size();
        let mut out: Vec<u32> = (0..1u32 << g)
            .filter(|&s| !d.contains_face(s))
            .filter(|&s| (0..g).filter(|&e| s >> e & 1 == 1).all(|e| d.contains_face(s & !(1 << e))))
            .collect();
        out.sort_by_key(|&s| (s.count_ones(), s));
        out
    }

    #[test]
    fn p3_facets() {
        let d = stanley_reisner_complex(&Graph::path(3));
        assert_eq!(facet_strings(&d), vec!["{x1,x2,x3,y1}", "{x1,x3,y1,y3}", "{x2,x3,y1,y2}", "{x3,y1,y2,y3}"]);
        assert!(d.is_pure());
        assert_eq!(d.max_facet_size(), 4);
    }

    #[test]
    fn k3_facets() {
        let d = stanley_reisner_complex(&Graph::complete(3));
        assert_eq!(d.facets.len(), 3);
        assert_eq!(facet_strings(&d), vec!["{x1,x2,x3,y1}", "{x2,x3,y1,y2}", "{x3,y1,y2,y3}"]);
    }

    #[test]
    fn nonfaces_match_initial_ideal() {
        for g in [Graph::path(3), Graph::complete(3), Graph::cycle(4), build_fm(3).unwrap()] {
            let d = stanley_reisner_complex(&g);
            let mut gens: Vec<u32> = initial_ideal(&g).iter().map(|m| m.support()).collect();
            gens.sort_by_key(|&s| (s.count_ones(), s));
            let nf = minimal_nonfaces(&d);
            assert_eq!(nf, gens);
            if g.n() <= 4 {
                assert_eq!(nf, brute_minimal_nonfaces(&d));
            }
        }
        let simplex = SimplicialComplex::new(variable_labels(2), vec![0b1111]);
        assert!(minimal_nonfaces(&simplex).is_empty());
    }

    #[test]
    fn f_vectors() {
        assert_eq!(f_vector(&clique_complex(&Graph::complete(3))), vec![3, 3, 1]);
        assert_eq!(f_vector(&clique_complex(&Graph::path(3))), vec![3, 2]);
        // F_3 is bipartite, so it has no triangles.
        assert_eq!(f_vector(&clique_complex(&build_fm(3).unwrap())), vec![6, 6]);
    }

    #[test]
    fn restriction_and_faces() {
        let d = SimplicialComplex::new(vec!["a".into(), "b".into(), "c".into()], vec![0b011, 0b110]);
        assert_eq!(d.faces().len(), 6);
        assert_eq!(d.restriction_facets(0b101), vec![0b001, 0b100]);
        assert_eq!(d.to_string(), "{a,b}\n{b,c}\n");
    }
}
