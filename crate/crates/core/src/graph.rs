//! Simple undirected graphs on at most [`MAX_ORDER`] vertices.
//!
//! Each vertex owns a `u64` neighborhood bitset, so set operations on
//! neighborhoods are single machine instructions. Graphs are immutable once
//! built; every transformation returns a new value.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Largest supported order. Keeps the graph6 order field to one byte.
pub const MAX_ORDER: usize = 62;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("order {0} exceeds the supported maximum of {MAX_ORDER}")]
    UnsupportedOrder(usize),
    #[error("vertex {vertex} out of range for a graph of order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("adjacency is not symmetric between {0} and {1}")]
    Asymmetric(usize, usize),
    #[error("invalid construction: {0}")]
    InvalidConstruction(String),
}

/// Iterator over the set bits of a `u64`, lowest first.
#[derive(Debug, Clone, Copy)]
pub struct Bits(pub u64);

impl Iterator for Bits {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            let i = self.0.trailing_zeros() as usize;
            self.0 &= self.0 - 1;
            Some(i)
        }
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let c = self.0.count_ones() as usize;
        (c, Some(c))
    }
}

impl ExactSizeIterator for Bits {}

#[inline]
pub fn bit(v: usize) -> u64 {
    1u64 << v
}

/// Mask with the lowest `n` bits set.
#[inline]
pub fn full_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Graph, GraphError> {
        if n > MAX_ORDER {
            return Err(GraphError::UnsupportedOrder(n));
        }
        Ok(Graph { n, adj: vec![0; n] })
    }

    pub fn from_edges<I>(n: usize, edges: I) -> Result<Graph, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::empty(n)?;
        for (u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: w, order: n });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            g.set_edge(u, v);
        }
        Ok(g)
    }

    /// Builds a graph from raw neighborhood bitsets, checking every invariant.
    pub fn from_adjacency(adj: Vec<u64>) -> Result<Graph, GraphError> {
        let n = adj.len();
        if n > MAX_ORDER {
            return Err(GraphError::UnsupportedOrder(n));
        }
        let all = full_mask(n);
        for (v, &row) in adj.iter().enumerate() {
            if row & !all != 0 {
                let vertex = (row & !all).trailing_zeros() as usize;
                return Err(GraphError::VertexOutOfRange { vertex, order: n });
            }
            if row & bit(v) != 0 {
                return Err(GraphError::SelfLoop(v));
            }
            for u in Bits(row) {
                if adj[u] & bit(v) == 0 {
                    return Err(GraphError::Asymmetric(v, u));
                }
            }
        }
        Ok(Graph { n, adj })
    }

    /// Caller guarantees symmetry, no loops and `adj.len() <= MAX_ORDER`.
    pub(crate) fn from_adjacency_unchecked(adj: Vec<u64>) -> Graph {
        debug_assert!(Graph::from_adjacency(adj.clone()).is_ok());
        Graph { n: adj.len(), adj }
    }

    /// Same edges on a vertex set of size `n >= self.order()`.
    pub(crate) fn resized(&self, n: usize) -> Graph {
        let mut adj = self.adj.clone();
        adj.resize(n, 0);
        Graph::from_adjacency_unchecked(adj)
    }

    pub(crate) fn set_edge(&mut self, u: usize, v: usize) {
        self.adj[u] |= bit(v);
        self.adj[v] |= bit(u);
    }

    pub(crate) fn clear_edge(&mut self, u: usize, v: usize) {
        self.adj[u] &= !bit(v);
        self.adj[v] &= !bit(u);
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    /// Mask of all vertices.
    #[inline]
    pub fn vertex_mask(&self) -> u64 {
        full_mask(self.n)
    }

    /// Neighborhood bitset of `v`.
    #[inline]
    pub fn adj(&self, v: usize) -> u64 {
        self.adj[v]
    }

    #[inline]
    pub fn adjacency(&self) -> &[u64] {
        &self.adj
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> Bits {
        Bits(self.adj[v])
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u] & bit(v) != 0
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|a| a.count_ones() as usize).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| Bits(self.adj[u] & !full_mask(u + 1)).map(move |v| (u, v)))
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    /// Minimum degree; 0 for the null graph.
    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    /// Subgraph induced by `mask`, together with the new-to-old vertex map.
    pub fn induced(&self, mask: u64) -> (Graph, Vec<usize>) {
        let keep: Vec<usize> = Bits(mask & self.vertex_mask()).collect();
        let mut index = [usize::MAX; 64];
        for (i, &v) in keep.iter().enumerate() {
            index[v] = i;
        }
        let adj = keep.iter().map(|&v| Bits(self.adj[v] & mask).fold(0u64, |acc, u| acc | bit(index[u]))).collect();
        (Graph::from_adjacency_unchecked(adj), keep)
    }

    /// Relabels vertices: vertex `v` becomes `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n, "permutation length must match order");
        let mut adj = vec![0u64; self.n];
        for v in 0..self.n {
            adj[perm[v]] = Bits(self.adj[v]).fold(0u64, |acc, u| acc | bit(perm[u]));
        }
        Graph::from_adjacency_unchecked(adj)
    }

    pub fn with_edge(&self, u: usize, v: usize) -> Result<Graph, GraphError> {
        self.check_pair(u, v)?;
        let mut g = self.clone();
        g.set_edge(u, v);
        Ok(g)
    }

    pub fn without_edge(&self, u: usize, v: usize) -> Result<Graph, GraphError> {
        self.check_pair(u, v)?;
        let mut g = self.clone();
        g.clear_edge(u, v);
        Ok(g)
    }

    fn check_pair(&self, u: usize, v: usize) -> Result<(), GraphError> {
        for w in [u, v] {
            if w >= self.n {
                return Err(GraphError::VertexOutOfRange { vertex: w, order: self.n });
            }
        }
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        Ok(())
    }

    /// Vertices reachable from `v` through vertices of `within` (plus `v`).
    pub fn reach(&self, v: usize, within: u64) -> u64 {
        reach(&self.adj, v, within)
    }

    /// Connected components as vertex masks, ordered by smallest vertex.
    pub fn components(&self) -> Vec<u64> {
        let mut left = self.vertex_mask();
        let mut comps = Vec::new();
        while left != 0 {
            let v = left.trailing_zeros() as usize;
            let c = self.reach(v, left);
            comps.push(c);
            left &= !c;
        }
        comps
    }

    pub fn is_connected(&self) -> bool {
        self.n == 0 || self.reach(0, self.vertex_mask()) == self.vertex_mask()
    }

    /// Number of edges with both ends in `mask`.
    pub fn edges_within(&self, mask: u64) -> usize {
        Bits(mask).map(|v| (self.adj[v] & mask).count_ones() as usize).sum::<usize>() / 2
    }

    pub fn to_graph6(&self) -> String {
        crate::graph6::write_graph6(self)
    }
}

/// Bitset flood fill: everything connected to `v` using only vertices in `within`.
#[inline]
pub(crate) fn reach(adj: &[u64], v: usize, within: u64) -> u64 {
    let within = within | bit(v);
    let mut seen = bit(v);
    let mut frontier = seen;
    while frontier != 0 {
        let mut next = 0u64;
        for u in Bits(frontier) {
            next |= adj[u];
        }
        next &= within & !seen;
        seen |= next;
        frontier = next;
    }
    seen
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph({} {:?})", self.n, self.edges().collect::<Vec<_>>())
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_graph6())
    }
}

/// Degree data of a graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreeProfile {
    pub degrees: Vec<usize>,
    pub min_degree: usize,
    pub max_degree: usize,
    pub edges: usize,
}

pub fn degree_profile(g: &Graph) -> DegreeProfile {
    let degrees = g.degrees();
    let min_degree = degrees.iter().copied().min().unwrap_or(0);
    let max_degree = degrees.iter().copied().max().unwrap_or(0);
    let edges = degrees.iter().sum::<usize>() / 2;
    DegreeProfile { degrees, min_degree, max_degree, edges }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn from_edges_rejects_loops_and_range() {
        assert_eq!(Graph::from_edges(3, [(1, 1)]), Err(GraphError::SelfLoop(1)));
        assert!(matches!(Graph::from_edges(3, [(0, 3)]), Err(GraphError::VertexOutOfRange { vertex: 3, order: 3 })));
        assert_eq!(Graph::empty(63), Err(GraphError::UnsupportedOrder(63)));
    }

    #[test]
    fn from_adjacency_checks_symmetry() {
        assert_eq!(Graph::from_adjacency(vec![0b10, 0]), Err(GraphError::Asymmetric(0, 1)));
        assert!(Graph::from_adjacency(vec![0b10, 0b01]).is_ok());
    }

    #[test]
    fn induced_and_permuted() {
        let p4 = Graph::from_edges(4, [(0, 1), (1, 2), (2, 3)]).unwrap();
        let (sub, map) = p4.induced(0b1110);
        assert_eq!(map, vec![1, 2, 3]);
        assert_eq!(sub.edges().collect::<Vec<_>>(), vec![(0, 1), (1, 2)]);
        let q = p4.permuted(&[3, 2, 1, 0]);
        assert_eq!(q.edges().collect::<Vec<_>>(), vec![(0, 1), (1, 2), (2, 3)]);
    }

    #[test]
    fn p4_profile() {
        let p4 = Graph::from_edges(4, [(0, 1), (1, 2), (2, 3)]).unwrap();
        let prof = degree_profile(&p4);
        assert_eq!(prof.min_degree, 1);
        assert_eq!(prof.edges, 3);
        assert_eq!(prof.degrees, vec![1, 2, 2, 1]);
    }

    #[test]
    fn components_of_two_triangles() {
        let g = Graph::from_edges(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]).unwrap();
        assert_eq!(g.components(), vec![0b000111, 0b111000]);
        assert!(!g.is_connected());
    }
}
