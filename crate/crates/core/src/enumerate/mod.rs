//! Isomorph-free generation by canonical augmentation (adding one vertex at a
//! time), plus graph6 stream ingestion.
//!
//! A child `G = P + v` with `N(v) = S` is kept when
//! 1. `S` is the smallest set in its orbit under `Aut(P)`, and
//! 2. `v` lies in the `Aut(G)`-orbit of the canonical deletion vertex of `G`:
//!    among non-cut vertices, the one minimizing (degree, neighbor degree sum,
//!    triangle count), ties broken by the highest canonical position.
//!
//! Deleting a non-cut vertex keeps connected graphs connected, and removing
//! `j` vertices lowers the minimum degree by at most `j`, so every ancestor of
//! an accepted graph passes the level-wise pruning used below.

mod ingest;

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use ingest::{ingest_graph6_stream, Graph6Stream, IngestError, IngestOptions};

use crate::blocks::cut_vertices;
use crate::canon::canonical_form;
use crate::graph::{bit, full_mask, reach, Bits, Graph};

/// Largest order generated directly.
pub const ENUM_ORDER_CAP: usize = 11;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize, Default)]
#[serde(rename_all = "snake_case")]
pub enum Connectivity {
    #[default]
    Any,
    Connected,
    TwoConnected,
    HasCutVertex,
}

impl Connectivity {
    pub fn admits(self, g: &Graph) -> bool {
        match self {
            Connectivity::Any => true,
            Connectivity::Connected => g.is_connected(),
            Connectivity::TwoConnected => crate::blocks::is_two_connected(g),
            Connectivity::HasCutVertex => g.is_connected() && cut_vertices(g) != 0,
        }
    }
}

impl std::str::FromStr for Connectivity {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().replace('-', "_").as_str() {
            "any" => Ok(Connectivity::Any),
            "connected" => Ok(Connectivity::Connected),
            "two_connected" | "2connected" | "2_connected" | "biconnected" => Ok(Connectivity::TwoConnected),
            "has_cut_vertex" | "cut_vertex" | "cut" => Ok(Connectivity::HasCutVertex),
            _ => Err(format!("unknown connectivity {s:?}")),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct EnumFilter {
    pub n: usize,
    pub min_degree: usize,
    pub connectivity: Connectivity,
}

impl EnumFilter {
    pub fn new(n: usize, min_degree: usize, connectivity: Connectivity) -> EnumFilter {
        EnumFilter { n, min_degree, connectivity }
    }

    pub fn admits(&self, g: &Graph) -> bool {
        g.order() == self.n && g.min_degree() >= self.min_degree && self.connectivity.admits(g)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EnumError {
    #[error(
        "built-in generation is limited to n <= {ENUM_ORDER_CAP}; got n = {0} (ingest larger universes as graph6)"
    )]
    OrderCap(usize),
}

/// One parent under expansion.
struct Frame {
    adj: Vec<u64>,
    /// Automorphism generators, empty when the group is trivial.
    gens: Vec<Vec<usize>>,
    /// `lt[k]`: vertices of degree `< k`; `eq[k]`: degree exactly `k`.
    lt: Vec<u64>,
    eq: Vec<u64>,
    /// Vertices that must be adjacent to the new vertex.
    must: u64,
    /// Vertices that may be adjacent to the new vertex.
    free: u64,
    /// Lower bound on the new vertex's degree.
    min_s: usize,
    /// Next subset of `free` to try; `None` when exhausted.
    next: Option<u64>,
    /// Components, for the at-most-one-component rule.
    comps: Vec<u64>,
}

/// Deterministic stream of graphs satisfying an [`EnumFilter`], one per
/// isomorphism class.
pub struct GraphStream {
    filter: EnumFilter,
    connected: bool,
    stack: Vec<Frame>,
    pending_null: bool,
}

pub fn enumerate_graphs(filter: EnumFilter) -> Result<GraphStream, EnumError> {
    if filter.n > ENUM_ORDER_CAP {
        return Err(EnumError::OrderCap(filter.n));
    }
    let connected = filter.connectivity != Connectivity::Any;
    let mut stream = GraphStream { filter, connected, stack: Vec::new(), pending_null: false };
    if filter.n == 0 {
        stream.pending_null = !connected;
    } else if filter.min_degree < filter.n || (filter.n == 1 && filter.min_degree == 0) {
        stream.push_parent(Vec::new(), Vec::new());
    }
    Ok(stream)
}

impl GraphStream {
    fn push_parent(&mut self, adj: Vec<u64>, gens: Vec<Vec<usize>>) {
        let m = adj.len();
        let child_order = m + 1;
        let need = (self.filter.min_degree + child_order).saturating_sub(self.filter.n);
        let mut lt = vec![0u64; m + 2];
        let mut eq = vec![0u64; m + 2];
        for (v, a) in adj.iter().enumerate() {
            let d = a.count_ones() as usize;
            eq[d] |= bit(v);
            for slot in lt.iter_mut().skip(d + 1) {
                *slot |= bit(v);
            }
        }
        let all = full_mask(m);
        let must = if need > 0 { lt[need.min(m + 1)] } else { 0 };
        let mut min_s = need;
        if self.connected && m > 0 {
            min_s = min_s.max(1);
        }
        let g = Graph::from_adjacency_unchecked(adj);
        let comps = g.components();
        let adj = g.adjacency().to_vec();
        // Too many forced neighbors, or not enough vertices to reach the degree.
        let next = if min_s > m || (self.connected && comps.len() > 1) { None } else { Some(0) };
        self.stack.push(Frame { adj, gens, lt, eq, must, free: all & !must, min_s, next, comps });
    }

    /// Advances the top frame to its next accepted child.
    fn next_child(&mut self) -> Option<Child> {
        let frame = self.stack.last_mut()?;
        loop {
            let t = frame.next?;
            frame.next = if t == frame.free { None } else { Some(t.wrapping_sub(frame.free) & frame.free) };
            let s = frame.must | t;
            let size = s.count_ones() as usize;
            if size < frame.min_s {
                continue;
            }
            if s != 0 && !frame.comps.iter().any(|&c| s & !c == 0) {
                continue;
            }
            if let Some(result) = accept(frame, s, size) {
                return Some(result);
            }
        }
    }
}

/// Smallest image test for `s` under the group generated by `gens`.
fn is_orbit_minimum(s: u64, gens: &[Vec<usize>]) -> bool {
    let mut seen = vec![s];
    let mut i = 0;
    while i < seen.len() {
        let cur = seen[i];
        i += 1;
        for g in gens {
            let img = Bits(cur).fold(0u64, |acc, v| acc | bit(g[v]));
            if img < s {
                return false;
            }
            if !seen.contains(&img) {
                seen.push(img);
            }
        }
    }
    true
}

fn is_cut(adj: &[u64], all: u64, u: usize) -> bool {
    let nb = adj[u];
    if nb & (nb.wrapping_sub(1)) == 0 {
        return false;
    }
    let w = nb.trailing_zeros() as usize;
    let comp = reach(adj, u, all);
    reach(adj, w, comp & !bit(u)) != comp & !bit(u)
}

/// Secondary invariant: neighbor degree sum, then triangles.
fn invariant(adj: &[u64], u: usize) -> u64 {
    let mut sum = 0u64;
    let mut tri = 0u64;
    for w in Bits(adj[u]) {
        sum += adj[w].count_ones() as u64;
        tri += (adj[w] & adj[u]).count_ones() as u64;
    }
    (sum << 16) | (tri / 2)
}

/// Child adjacency and, if computed, its automorphism generators.
type Child = (Vec<u64>, Option<Vec<Vec<usize>>>);

/// Applies the canonical-deletion rule to the child `P + v` with `N(v) = s`.
/// Returns the child adjacency and, if computed, its automorphism generators.
fn accept(frame: &Frame, s: u64, size: usize) -> Option<Child> {
    let m = frame.adj.len();
    let v = m;
    let p_all = full_mask(m);
    let (low, eq) = if size == 0 {
        (0, frame.eq[0] & !s)
    } else {
        (
            (s & frame.lt[size - 1]) | (!s & p_all & frame.lt[size]),
            (s & frame.eq[size - 1]) | (!s & p_all & frame.eq.get(size).copied().unwrap_or(0)),
        )
    };
    if !frame.gens.is_empty() && !is_orbit_minimum(s, &frame.gens) {
        return None;
    }
    let mut adj = frame.adj.clone();
    for u in Bits(s) {
        adj[u] |= bit(v);
    }
    adj.push(s);
    let all = full_mask(m + 1);
    for u in Bits(low) {
        if !is_cut(&adj, all, u) {
            return None;
        }
    }
    let inv_v = invariant(&adj, v);
    let mut ties = 0u64;
    for u in Bits(eq) {
        let inv_u = invariant(&adj, u);
        if inv_u > inv_v || is_cut(&adj, all, u) {
            continue;
        }
        if inv_u < inv_v {
            return None;
        }
        ties |= bit(u);
    }
    if ties == 0 {
        return Some((adj, None));
    }
    let g = Graph::from_adjacency_unchecked(adj);
    let canon = canonical_form(&g);
    let chosen = Bits(ties | bit(v)).max_by_key(|&u| canon.pos[u]).expect("non-empty tie set");
    let orbits = canon.orbits();
    if orbits[chosen] != orbits[v] {
        return None;
    }
    let gens = canon.generators;
    Some((g.adjacency().to_vec(), Some(gens)))
}

impl Iterator for GraphStream {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        if self.pending_null {
            self.pending_null = false;
            return Some(Graph::from_adjacency_unchecked(Vec::new()));
        }
        loop {
            let top = self.stack.last()?;
            let child_order = top.adj.len() + 1;
            match self.next_child() {
                None => {
                    self.stack.pop();
                }
                Some((adj, gens)) => {
                    if child_order == self.filter.n {
                        let g = Graph::from_adjacency_unchecked(adj);
                        if self.filter.admits(&g) {
                            return Some(g);
                        }
                    } else {
                        let gens = match gens {
                            Some(gens) => gens,
                            None => canonical_form(&Graph::from_adjacency_unchecked(adj.clone())).generators,
                        };
                        self.push_parent(adj, gens);
                    }
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn count(n: usize, d: usize, c: Connectivity) -> usize {
        enumerate_graphs(EnumFilter::new(n, d, c)).unwrap().count()
    }

    #[test]
    fn small_counts() {
        assert_eq!(count(4, 0, Connectivity::Connected), 6);
        assert_eq!(count(4, 2, Connectivity::Connected), 3);
        assert_eq!(count(4, 0, Connectivity::Any), 11);
        assert_eq!(count(5, 0, Connectivity::Any), 34);
        assert_eq!(count(6, 0, Connectivity::Connected), 112);
        assert_eq!(count(0, 0, Connectivity::Any), 1);
        assert_eq!(count(0, 0, Connectivity::Connected), 0);
        assert_eq!(count(1, 0, Connectivity::Connected), 1);
        assert_eq!(count(3, 3, Connectivity::Any), 0);
    }

    #[test]
    fn order_cap() {
        assert!(matches!(enumerate_graphs(EnumFilter::new(12, 0, Connectivity::Any)), Err(EnumError::OrderCap(12))));
    }
}
