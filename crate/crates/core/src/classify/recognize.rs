use crate::graphs::{build_fm, build_g1, build_g2, build_hi, canonical_word, chain, decompose, Graph, VertexSet};
use crate::ideal::{cut_sets, stanley_reisner_complex};
use serde::Serialize;
use std::collections::HashSet;
use std::fmt;

/// Regularity of `S/J_G` when it is at most 2, decided combinatorially.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum RegBound {
    Exactly(usize),
    AboveTwo,
}

impl fmt::Display for RegBound {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RegBound::Exactly(r) => write!(f, "{r}"),
            RegBound::AboveTwo => write!(f, ">2"),
        }
    }
}

/// Regularity is additive over components; a connected non-complete graph
/// has regularity 2 exactly when it is a join of two graphs of regularity
/// at most 2, and at least 2 otherwise.
pub fn km_regularity_le2(g: &Graph) -> RegBound {
    let mut total = 0;
    for comp in g.components(VertexSet::EMPTY) {
        let (h, _) = g.induced(comp);
        match connected_reg(&h) {
            RegBound::Exactly(r) => total += r,
            RegBound::AboveTwo => return RegBound::AboveTwo,
        }
        if total > 2 {
            return RegBound::AboveTwo;
        }
    }
    RegBound::Exactly(total)
}

fn connected_reg(g: &Graph) -> RegBound {
    if g.n() == 1 {
        return RegBound::Exactly(0);
    }
    if g.is_complete() {
        return RegBound::Exactly(1);
    }
    // Join factors are unions of components of the complement.
    let co = g.complement().components(VertexSet::EMPTY);
    if co.len() < 2 {
        return RegBound::AboveTwo;
    }
    for mask in 1u64..(1u64 << (co.len() - 1)) {
        let side: VertexSet = co
            .iter()
            .enumerate()
            .filter(|(k, _)| mask >> k & 1 == 1)
            .fold(VertexSet::EMPTY, |acc, (_, c)| acc.union(*c));
        let other = g.vertices().difference(side);
        let ok = [side, other].iter().all(|s| km_regularity_le2(&g.induced(*s).0) != RegBound::AboveTwo);
        if ok {
            return RegBound::Exactly(2);
        }
    }
    RegBound::AboveTwo
}

/// `(r, s, i)` with `g ≅ H_i` built from `K_r ⊔ K_s`, `r <= s`.
pub fn recognize_hi(g: &Graph) -> Option<(usize, usize, usize)> {
    let n = g.n();
    if n < 3 || !g.is_connected() {
        return None;
    }
    let word = canonical_word(g);
    // |V(H_i)| = r + s + 1 + 2(i - 1).
    for i in 1..=(n - 1) / 2 {
        let Some(rs) = (n + 1).checked_sub(2 * i) else { break };
        for r in 1..=rs / 2 {
            let s = rs - r;
            if r > s {
                continue;
            }
            if canonical_word(&build_hi(r, s, i).ok()?) == word {
                return Some((r, s, i));
            }
        }
    }
    None
}

/// `(j, i)` with `g ≅ G_i^j`.
pub fn recognize_gij(g: &Graph) -> Option<(usize, usize)> {
    let n = g.n();
    if n < 6 || n % 2 == 1 {
        return None;
    }
    let i = (n - 4) / 2;
    let word = canonical_word(g);
    if canonical_word(&build_g1(i).ok()?) == word {
        return Some((1, i));
    }
    if canonical_word(&build_g2(i).ok()?) == word {
        return Some((2, i));
    }
    None
}

/// Unmixed with an accessible cut-set system: every nonempty cut set `T`
/// has some `t` with `T \ {t}` again a cut set.
pub fn is_accessible(g: &Graph) -> bool {
    if !stanley_reisner_complex(g).is_pure() {
        return false;
    }
    let Ok(sets) = cut_sets(g) else { return false };
    let members: HashSet<u64> = sets.iter().map(|c| c.vertices.0).collect();
    sets.iter().all(|c| {
        c.vertices.is_empty() || c.vertices.iter().any(|t| members.contains(&(c.vertices.0 & !(1u64 << (t - 1)))))
    })
}

// A lone vertex is the path P_1 and counts as a piece of either kind.
fn is_fm_piece(h: &Graph, word: &str) -> bool {
    h.n() == 1 || h.n().is_multiple_of(2) && build_fm(h.n() / 2).is_ok_and(|f| canonical_word(&f) == word)
}

/// Chains `F_{m_1} ∘ ... ∘ F_{m_t}` of the pseudo-Gorenstein pattern on `n`
/// vertices: `F_3 ∘ F_3`, or `3, 4, ..., 4, 3` with `t >= 3`.
fn pg_chain_patterns(n: usize) -> Vec<Vec<usize>> {
    // |V| = Σ 2 m_i - 3 (t - 1).
    let mut out = Vec::new();
    for t in 2.. {
        let ms: Vec<usize> = (0..t).map(|k| if k == 0 || k + 1 == t { 3 } else { 4 }).collect();
        let size = ms.iter().map(|m| 2 * m).sum::<usize>() - 3 * (t - 1);
        if size > n {
            break;
        }
        if size == n {
            out.push(ms);
        }
    }
    out
}

fn is_pg_piece(h: &Graph, word: &str) -> bool {
    if h.n() <= 2 {
        return h.is_path();
    }
    pg_chain_patterns(h.n()).iter().any(|ms| chain(ms).is_ok_and(|c| canonical_word(&c) == word))
}

/// For a connected bipartite graph: every indecomposable piece is some `F_m`.
pub fn recognize_bipartite_level(g: &Graph) -> bool {
    g.is_bipartite() && g.is_connected() && decompose(g).pieces.iter().all(|p| is_fm_piece(&p.graph, &p.word))
}

/// For a connected bipartite graph: every piece is `F_1`, `F_3 ∘ F_3`, or
/// `F_3 ∘ F_4 ∘ ... ∘ F_4 ∘ F_3`.
pub fn recognize_bipartite_pg(g: &Graph) -> bool {
    g.is_bipartite() && g.is_connected() && decompose(g).pieces.iter().all(|p| is_pg_piece(&p.graph, &p.word))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphs::{disjoint_union, join};

    #[test]
    fn km_examples() {
        assert_eq!(km_regularity_le2(&Graph::complete(4)), RegBound::Exactly(1));
        let k2k3 = disjoint_union(&Graph::complete(2), &Graph::complete(3));
        assert_eq!(km_regularity_le2(&k2k3), RegBound::Exactly(2));
        assert_eq!(km_regularity_le2(&Graph::path(5)), RegBound::AboveTwo);
        assert_eq!(km_regularity_le2(&Graph::path(3)), RegBound::Exactly(2));
        assert_eq!(km_regularity_le2(&Graph::empty(3)), RegBound::Exactly(0));
        // C_4 = (2 K_1) * (2 K_1).
        assert_eq!(km_regularity_le2(&Graph::cycle(4)), RegBound::Exactly(2));
        let j = join(&Graph::path(4), &Graph::complete(1));
        assert_eq!(km_regularity_le2(&j), RegBound::AboveTwo);
    }

    #[test]
    fn hi_recognition() {
        assert_eq!(recognize_hi(&Graph::path(3)), Some((1, 1, 1)));
        assert_eq!(recognize_hi(&build_hi(1, 2, 3).unwrap().relabel(&[8, 7, 6, 5, 4, 3, 2, 1])), Some((1, 2, 3)));
        assert_eq!(recognize_hi(&Graph::complete(4)), None);
        assert_eq!(recognize_hi(&Graph::path(4)), None);
    }

    #[test]
    fn gij_recognition() {
        assert_eq!(recognize_gij(&build_g2(2).unwrap()), Some((2, 2)));
        assert_eq!(recognize_gij(&build_g1(1).unwrap()), Some((1, 1)));
        assert_eq!(recognize_gij(&Graph::complete(6)), None);
    }

    #[test]
    fn accessibility() {
        assert!(is_accessible(&Graph::path(4)));
        assert!(!is_accessible(&Graph::star(3)));
        assert!(is_accessible(&build_fm(3).unwrap()));
    }

    #[test]
    fn bipartite_recognizers() {
        assert!(recognize_bipartite_level(&build_fm(4).unwrap()));
        assert!(recognize_bipartite_pg(&chain(&[3, 3]).unwrap()));
        assert!(!recognize_bipartite_pg(&chain(&[3, 3, 3]).unwrap()));
        assert!(recognize_bipartite_pg(&chain(&[3, 4, 3]).unwrap()));
        assert!(!recognize_bipartite_level(&chain(&[3, 3]).unwrap()));
        assert!(recognize_bipartite_level(&Graph::path(5)));
        assert!(recognize_bipartite_pg(&Graph::path(5)));
        assert!(!recognize_bipartite_level(&Graph::complete(3)));
        assert!(recognize_bipartite_level(&Graph::complete(1)) && recognize_bipartite_pg(&Graph::complete(1)));
    }
}
