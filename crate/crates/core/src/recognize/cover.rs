use crate::graph::{bit, Bits, Graph};

/// A vertex cover of size at most `h`, if one exists.
pub fn vertex_cover_at_most(g: &Graph, h: usize) -> Option<u64> {
    cover_within(g.adjacency(), g.vertex_mask(), h)
}

/// Cover search restricted to the vertices in `alive`.
pub(crate) fn cover_within(adj: &[u64], alive: u64, h: usize) -> Option<u64> {
    let mut best_v = usize::MAX;
    let mut best_d = 0u32;
    let mut edges2 = 0u32;
    for v in Bits(alive) {
        let d = (adj[v] & alive).count_ones();
        edges2 += d;
        if d > best_d {
            best_d = d;
            best_v = v;
        }
    }
    if best_d == 0 {
        return Some(0);
    }
    // Each cover vertex removes at most `best_d` edges.
    if h == 0 || (edges2 / 2) as usize > h * best_d as usize {
        return None;
    }
    let v = best_v;
    if let Some(c) = cover_within(adj, alive & !bit(v), h - 1) {
        return Some(c | bit(v));
    }
    let nbrs = adj[v] & alive;
    let d = best_d as usize;
    if d <= h {
        if let Some(c) = cover_within(adj, alive & !nbrs & !bit(v), h - d) {
            return Some(c | nbrs);
        }
    }
    None
}

/// Whether `cover` meets every edge of `g`.
pub fn is_vertex_cover(g: &Graph, cover: u64) -> bool {
    g.edges().all(|(u, v)| cover & (bit(u) | bit(v)) != 0)
}
