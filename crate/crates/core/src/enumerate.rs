//! Isomorph-free generation of connected graphs.

use crate::error::{Error, Result};
use crate::graphs::{canonical_form, parse_graph6, Graph};
use std::collections::BTreeSet;

pub const MAX_ENUMERATION_N: usize = 8;

/// One graph per isomorphism class of connected graphs on `n` vertices, in
/// canonical labeling, sorted by canonical graph6 word.
///
/// Every connected graph has a vertex whose removal keeps it connected, so
/// all classes arise by attaching a new vertex to a smaller connected graph.
pub fn enumerate_connected(n: usize) -> Result<Vec<Graph>> {
    if !(1..=MAX_ENUMERATION_N).contains(&n) {
        return Err(Error::InvalidParameter(format!("enumeration supports 1 <= n <= {MAX_ENUMERATION_N}, got {n}")));
    }
    let mut words: BTreeSet<String> = BTreeSet::from([canonical_form(&Graph::complete(1)).word]);
    for k in 2..=n {
        let mut next = BTreeSet::new();
        for w in &words {
            let base = parse_graph6(w)?;
            for nbrs in 1u64..1 << (k - 1) {
                let mut g = Graph::empty(k);
                for (u, v) in base.edges() {
                    g.add_edge(u, v);
                }
                for u in 1..k {
                    if nbrs >> (u - 1) & 1 == 1 {
                        g.add_edge(u, k);
                    }
                }
                next.insert(canonical_form(&g).word);
            }
        }
        words = next;
    }
    words.iter().map(|w| parse_graph6(w)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_counts() {
        let counts: Vec<usize> = (1..=5).map(|n| enumerate_connected(n).unwrap().len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 6, 21]);
        assert!(enumerate_connected(0).is_err());
        assert!(enumerate_connected(9).is_err());
    }
}
