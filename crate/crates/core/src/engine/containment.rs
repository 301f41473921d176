use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::forest::LinearForest;
use crate::graph::{bit, reach, Bits, Graph};

/// Vertex-disjoint paths witnessing `F ⊆ G`, one per component of `F` in the
/// forest's (descending) component order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct EmbeddingCertificate {
    pub paths: Vec<Vec<usize>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CertificateError {
    #[error("certificate has {found} paths, forest has {expected} components")]
    ComponentCount { expected: usize, found: usize },
    #[error("path {index} has order {found}, expected {expected}")]
    PathOrder { index: usize, expected: usize, found: usize },
    #[error("vertex {0} is out of range")]
    OutOfRange(usize),
    #[error("vertex {0} is used twice")]
    Reused(usize),
    #[error("{0} and {1} are consecutive on a path but not adjacent")]
    NotAdjacent(usize, usize),
}

/// Decides whether `g` contains `f` as a subgraph, returning the paths if so.
pub fn contains_linear_forest(g: &Graph, f: &LinearForest) -> Option<EmbeddingCertificate> {
    let n = g.order();
    if f.total_order() > n {
        return None;
    }
    // Relabel so that index order is the search order: degree descending, then index.
    let mut by_rank: Vec<usize> = (0..n).collect();
    by_rank.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    let mut rank = vec![0usize; n];
    for (r, &v) in by_rank.iter().enumerate() {
        rank[v] = r;
    }
    let h = g.permuted(&rank);
    let mut packer = Packer {
        adj: h.adjacency(),
        all: h.vertex_mask(),
        orders: f.orders(),
        suffix: suffix_sums(f.orders()),
        starts: vec![0; f.len()],
        paths: Vec::with_capacity(f.len()),
    };
    if packer.place(0, 0) {
        let paths = packer.paths.into_iter().map(|p| p.into_iter().map(|r| by_rank[r]).collect()).collect();
        Some(EmbeddingCertificate { paths })
    } else {
        None
    }
}

fn suffix_sums(orders: &[usize]) -> Vec<usize> {
    let mut s = vec![0; orders.len() + 1];
    for i in (0..orders.len()).rev() {
        s[i] = s[i + 1] + orders[i];
    }
    s
}

struct Packer<'a> {
    adj: &'a [u64],
    all: u64,
    orders: &'a [usize],
    suffix: Vec<usize>,
    starts: Vec<usize>,
    paths: Vec<Vec<usize>>,
}

impl Packer<'_> {
    fn place(&mut self, ci: usize, used: u64) -> bool {
        if ci == self.orders.len() {
            return true;
        }
        let avail = self.all & !used;
        if (avail.count_ones() as usize) < self.suffix[ci] {
            return false;
        }
        let t = self.orders[ci];
        // Interchangeable components start at increasing vertices.
        let min_start = if ci > 0 && self.orders[ci - 1] == t { self.starts[ci - 1] + 1 } else { 0 };
        let candidates = avail & !crate::graph::full_mask(min_start);
        for s in Bits(candidates) {
            if (reach(self.adj, s, avail).count_ones() as usize) < t {
                continue;
            }
            self.starts[ci] = s;
            self.paths.push(vec![s]);
            if self.extend(ci, used | bit(s), s) {
                return true;
            }
            self.paths.pop();
        }
        false
    }

    fn extend(&mut self, ci: usize, used: u64, last: usize) -> bool {
        let t = self.orders[ci];
        let len = self.paths[ci].len();
        if len == t {
            // Each path is found once: its start precedes its end.
            return last > self.paths[ci][0] && self.place(ci + 1, used);
        }
        let avail = self.all & !used;
        let need = t - len;
        if (reach(self.adj, last, avail).count_ones() as usize) <= need {
            return false;
        }
        let mut next = self.adj[last] & avail;
        if need == 1 {
            // The final vertex must come after the start.
            next &= !crate::graph::full_mask(self.paths[ci][0] + 1);
        }
        for u in Bits(next) {
            self.paths[ci].push(u);
            if self.extend(ci, used | bit(u), u) {
                return true;
            }
            self.paths[ci].pop();
        }
        false
    }
}

/// Independent check of a certificate against `g` and `f`.
pub fn validate_certificate(g: &Graph, f: &LinearForest, cert: &EmbeddingCertificate) -> Result<(), CertificateError> {
    if cert.paths.len() != f.len() {
        return Err(CertificateError::ComponentCount { expected: f.len(), found: cert.paths.len() });
    }
    let mut seen = vec![false; g.order()];
    for (index, (path, &expected)) in cert.paths.iter().zip(f.orders()).enumerate() {
        if path.len() != expected {
            return Err(CertificateError::PathOrder { index, expected, found: path.len() });
        }
        for &v in path {
            if v >= g.order() {
                return Err(CertificateError::OutOfRange(v));
            }
            if std::mem::replace(&mut seen[v], true) {
                return Err(CertificateError::Reused(v));
            }
        }
        for w in path.windows(2) {
            if !g.has_edge(w[0], w[1]) {
                return Err(CertificateError::NotAdjacent(w[0], w[1]));
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::build::{complete, join, path};
    use crate::forest::parse_forest;

    #[test]
    fn p4_holds_two_edges() {
        let g = path(4).unwrap();
        let f = parse_forest("2,2").unwrap();
        let cert = contains_linear_forest(&g, &f).unwrap();
        assert!(validate_certificate(&g, &f, &cert).is_ok());
        let mut flat: Vec<usize> = cert.paths.concat();
        flat.sort_unstable();
        assert_eq!(flat, vec![0, 1, 2, 3]);
    }

    #[test]
    fn star_has_no_matching() {
        let star = join(&complete(1).unwrap(), &Graph::empty(5).unwrap()).unwrap();
        assert!(contains_linear_forest(&star, &parse_forest("2,2").unwrap()).is_none());
    }

    #[test]
    fn validator_rejects_bad_certificates() {
        let g = path(4).unwrap();
        let f = parse_forest("2,2").unwrap();
        let bad = EmbeddingCertificate { paths: vec![vec![0, 2], vec![1, 3]] };
        assert_eq!(validate_certificate(&g, &f, &bad), Err(CertificateError::NotAdjacent(0, 2)));
        let reuse = EmbeddingCertificate { paths: vec![vec![0, 1], vec![1, 2]] };
        assert_eq!(validate_certificate(&g, &f, &reuse), Err(CertificateError::Reused(1)));
    }
}
