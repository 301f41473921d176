//! graph6 text encoding, restricted to the one-byte order field (n <= 62).

use thiserror::Error;

use crate::graph::{bit, Graph, MAX_ORDER};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Graph6Error {
    #[error("empty graph6 line")]
    Empty,
    #[error("invalid graph6 character {ch:?} at byte {pos}")]
    InvalidChar { ch: char, pos: usize },
    #[error("graph6 bit vector truncated: expected {expected} data bytes, found {found}")]
    TruncatedBitVector { expected: usize, found: usize },
    #[error("graph6 line has {0} unexpected trailing bytes")]
    TrailingBytes(usize),
    #[error("unsupported order: only graphs with at most {MAX_ORDER} vertices are supported")]
    UnsupportedOrder,
}

fn data_len(n: usize) -> usize {
    (n * n.saturating_sub(1) / 2).div_ceil(6)
}

/// Parses one graph6 line. Surrounding whitespace is ignored.
pub fn parse_graph6(text: &str) -> Result<Graph, Graph6Error> {
    let bytes = text.trim().as_bytes();
    let (&first, rest) = bytes.split_first().ok_or(Graph6Error::Empty)?;
    for (pos, &b) in bytes.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(Graph6Error::InvalidChar { ch: b as char, pos });
        }
    }
    if first == 126 {
        return Err(Graph6Error::UnsupportedOrder);
    }
    let n = (first - 63) as usize;
    let expected = data_len(n);
    if rest.len() < expected {
        return Err(Graph6Error::TruncatedBitVector { expected, found: rest.len() });
    }
    if rest.len() > expected {
        return Err(Graph6Error::TrailingBytes(rest.len() - expected));
    }
    let mut adj = vec![0u64; n];
    let mut k = 0usize;
    for j in 1..n {
        for i in 0..j {
            let byte = rest[k / 6] - 63;
            if byte & (0x20 >> (k % 6)) != 0 {
                adj[i] |= bit(j);
                adj[j] |= bit(i);
            }
            k += 1;
        }
    }
    Ok(Graph::from_adjacency_unchecked(adj))
}

/// Encodes `g` as graph6. Every [`Graph`] fits the one-byte order field.
pub fn write_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut out = Vec::with_capacity(1 + data_len(n));
    out.push(n as u8 + 63);
    let mut acc = 0u8;
    let mut k = 0usize;
    for j in 1..n {
        for i in 0..j {
            if g.has_edge(i, j) {
                acc |= 0x20 >> (k % 6);
            }
            k += 1;
            if k % 6 == 0 {
                out.push(acc + 63);
                acc = 0;
            }
        }
    }
    if k % 6 != 0 {
        out.push(acc + 63);
    }
    String::from_utf8(out).expect("graph6 output is ASCII")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn known_strings() {
        let k4 = parse_graph6("C~").unwrap();
        assert_eq!(k4.edge_count(), 6);
        let k1 = parse_graph6("@").unwrap();
        assert_eq!((k1.order(), k1.edge_count()), (1, 0));
        let p4 = parse_graph6("Ch").unwrap();
        assert_eq!(p4.edges().collect::<Vec<_>>(), vec![(0, 1), (1, 2), (2, 3)]);
        assert_eq!(write_graph6(&p4), "Ch");
        assert_eq!(write_graph6(&Graph::empty(0).unwrap()), "?");
    }

    #[test]
    fn errors() {
        assert_eq!(parse_graph6(""), Err(Graph6Error::Empty));
        assert!(matches!(parse_graph6("C~ x"), Err(Graph6Error::InvalidChar { pos: 2, .. })));
        assert_eq!(parse_graph6("E"), Err(Graph6Error::TruncatedBitVector { expected: 3, found: 0 }));
        assert_eq!(parse_graph6("~?@A"), Err(Graph6Error::UnsupportedOrder));
        assert_eq!(parse_graph6("C~~"), Err(Graph6Error::TrailingBytes(1)));
    }
}
