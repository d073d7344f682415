use super::Graph;
use crate::error::{Error, Result};

const MAX_GRAPH6_N: usize = 62;

fn err(offset: usize, reason: &'static str) -> Error {
    Error::Graph6 { offset, reason }
}

/// Decodes a graph6 word (`n <= 62`, no `>>graph6<<` header).
///
/// Padding bits in the final byte must be zero so that
/// `emit_graph6(parse_graph6(w)) == w` for every accepted word.
pub fn parse_graph6(text: &str) -> Result<Graph> {
    let bytes = text.as_bytes();
    let &head = bytes.first().ok_or(err(0, "empty input"))?;
    if !(63..=126).contains(&head) {
        return Err(err(0, "invalid header byte"));
    }
    if head == 126 {
        return Err(err(0, "graphs with more than 62 vertices are not supported"));
    }
    let n = (head - 63) as usize;
    let nbits = n * n.saturating_sub(1) / 2;
    let nbytes = nbits.div_ceil(6);
    for (k, &b) in bytes.iter().enumerate().skip(1) {
        if !(63..=126).contains(&b) {
            return Err(err(k, "byte outside the graph6 range 63..=126"));
        }
    }
    if bytes.len() < 1 + nbytes {
        return Err(err(bytes.len(), "truncated adjacency bit field"));
    }
    if bytes.len() > 1 + nbytes {
        return Err(err(1 + nbytes, "trailing bytes after adjacency bit field"));
    }
    let mut g = Graph::empty(n);
    let mut bit = 0usize;
    for j in 1..n {
        for i in 0..j {
            let byte = bytes[1 + bit / 6] - 63;
            if byte >> (5 - bit % 6) & 1 == 1 {
                g.add_edge(i + 1, j + 1);
            }
            bit += 1;
        }
    }
    if !nbits.is_multiple_of(6) {
        let last = bytes[nbytes] - 63;
        let pad = 6 - nbits % 6;
        if last & ((1u8 << pad) - 1) != 0 {
            return Err(err(nbytes, "nonzero padding bits"));
        }
    }
    Ok(g)
}

pub fn emit_graph6(g: &Graph) -> String {
    let n = g.n();
    assert!(n <= MAX_GRAPH6_N, "graph6 emission supports n <= 62");
    let mut out = vec![(n + 63) as u8];
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | g.has_edge(i + 1, j + 1) as u8;
            filled += 1;
            if filled == 6 {
                out.push(acc + 63);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + 63);
    }
    String::from_utf8(out).expect("graph6 bytes are ASCII")
}

/// Parses the `"n; u v; u v; ..."` adjacency-list text format.
pub fn parse_adjacency_list(text: &str) -> Result<Graph> {
    let mut parts = text.split(';').map(str::trim).filter(|s| !s.is_empty());
    let n: usize = parts
        .next()
        .ok_or_else(|| Error::AdjacencyList("missing vertex count".into()))?
        .parse()
        .map_err(|_| Error::AdjacencyList("vertex count is not an integer".into()))?;
    if n > super::MAX_VERTICES {
        return Err(Error::AdjacencyList(format!("too many vertices: {n}")));
    }
    let mut edges = Vec::new();
    for p in parts {
        let ends: Vec<usize> = p
            .split_whitespace()
            .map(|t| t.parse())
            .collect::<std::result::Result<_, _>>()
            .map_err(|_| Error::AdjacencyList(format!("bad edge {p:?}")))?;
        match ends[..] {
            [u, v] => edges.push((u, v)),
            _ => return Err(Error::AdjacencyList(format!("edge {p:?} needs two endpoints"))),
        }
    }
    Graph::from_edges(n, &edges).map_err(|e| Error::AdjacencyList(e.to_string()))
}

/// Accepts either a graph6 word or the adjacency-list format (detected by `;`).
pub fn parse_graph(text: &str) -> Result<Graph> {
    let t = text.trim();
    if t.contains(';') {
        parse_adjacency_list(t)
    } else {
        parse_graph6(t)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    /// Independent decoder: expands every byte into its 6 bits first and
    /// reads the upper triangle column by column.
    fn oracle_decode(word: &str) -> Vec<(usize, usize)> {
        let b = word.as_bytes();
        let n = (b[0] - 63) as usize;
        let bits: Vec<bool> =
            b[1..].iter().flat_map(|&c| (0..6).rev().map(move |k| ((c - 63) >> k) & 1 == 1)).collect();
        let mut edges = Vec::new();
        let mut k = 0;
        for j in 0..n {
            for i in 0..j {
                if bits[k] {
                    edges.push((i + 1, j + 1));
                }
                k += 1;
            }
        }
        edges.sort();
        edges
    }

    #[test]
    fn small_words() {
        let k2 = parse_graph6("A_").unwrap();
        assert_eq!(k2.n(), 2);
        assert_eq!(k2.edges(), oracle_decode("A_"));
        assert_eq!(k2.edges(), vec![(1, 2)]);
        assert_eq!(emit_graph6(&Graph::empty(1)), "@");
        assert_eq!(emit_graph6(&Graph::empty(0)), "?");
        // petgraph's documented example: 5 vertices, edges ac ae bd de.
        let g = Graph::from_edges(5, &[(1, 3), (1, 5), (2, 4), (4, 5)]).unwrap();
        assert_eq!(emit_graph6(&g), "DQc");
        assert_eq!(parse_graph6("DQc").unwrap().edges(), oracle_decode("DQc"));
    }

    #[test]
    fn malformed_words() {
        assert!(matches!(parse_graph6("B"), Err(Error::Graph6 { offset: 1, .. })));
        assert!(matches!(parse_graph6(""), Err(Error::Graph6 { offset: 0, .. })));
        assert!(matches!(parse_graph6("A__"), Err(Error::Graph6 { offset: 2, .. })));
        assert!(matches!(parse_graph6("A`"), Err(Error::Graph6 { offset: 1, .. })));
        assert!(matches!(parse_graph6("~"), Err(Error::Graph6 { offset: 0, .. })));
        assert!(matches!(parse_graph6("B "), Err(Error::Graph6 { offset: 1, .. })));
    }

    #[test]
    fn adjacency_list_format() {
        let g = parse_graph("3; 1 2; 2 3").unwrap();
        assert_eq!(g, Graph::path(3));
        assert!(parse_adjacency_list("3; 1 4").is_err());
        assert!(parse_adjacency_list("x; 1 2").is_err());
        assert_eq!(parse_graph(" A_\n").unwrap(), Graph::complete(2));
    }

    fn arb_graph() -> impl Strategy<Value = Graph> {
        (1usize..=14).prop_flat_map(|n| {
            proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
                let mut g = Graph::empty(n);
                let mut k = 0;
                for j in 2..=n {
                    for i in 1..j {
                        if bits[k] {
                            g.add_edge(i, j);
                        }
                        k += 1;
                    }
                }
                g
            })
        })
    }

    proptest! {
        #[test]
        fn emit_parse_roundtrip(g in arb_graph()) {
            let w = emit_graph6(&g);
            let back = parse_graph6(&w).unwrap();
            prop_assert_eq!(&back, &g);
            prop_assert_eq!(back.edges(), oracle_decode(&w));
            prop_assert_eq!(emit_graph6(&back), w);
        }
    }
}
