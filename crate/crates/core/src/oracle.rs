//! Slow reference implementations used to cross-check the fast engines.

use crate::forest::LinearForest;
use crate::graph::Graph;

/// Containment by trying every injective assignment of forest vertices to
/// graph vertices, with no pruning beyond adjacency along each path.
pub fn naive_contains(g: &Graph, f: &LinearForest) -> bool {
    let n = g.order();
    if f.total_order() > n {
        return false;
    }
    // Slot i of the concatenated forest must follow slot i-1 when `link[i]`.
    let mut link = Vec::new();
    for &o in f.orders() {
        link.push(false);
        link.extend(std::iter::repeat(true).take(o - 1));
    }
    let mut image = vec![usize::MAX; link.len()];
    let mut used = vec![false; n];
    fn go(g: &Graph, link: &[bool], image: &mut [usize], used: &mut [bool], i: usize) -> bool {
        if i == link.len() {
            return true;
        }
        for v in 0..g.order() {
            if used[v] || (link[i] && !g.has_edge(image[i - 1], v)) {
                continue;
            }
            used[v] = true;
            image[i] = v;
            if go(g, link, image, used, i + 1) {
                return true;
            }
            used[v] = false;
        }
        false
    }
    go(g, &link, &mut image, &mut used, 0)
}

/// Isomorphism by trying all `n!` bijections.
pub fn brute_isomorphic(g: &Graph, h: &Graph) -> bool {
    if g.order() != h.order() || g.edge_count() != h.edge_count() {
        return false;
    }
    brute_monomorphic(g, h)
}

/// Subgraph containment by trying every injective map.
pub fn brute_monomorphic(small: &Graph, big: &Graph) -> bool {
    let mut map = vec![usize::MAX; small.order()];
    let mut used = vec![false; big.order()];
    fn go(s: &Graph, b: &Graph, map: &mut [usize], used: &mut [bool], i: usize) -> bool {
        if i == s.order() {
            return true;
        }
        for w in 0..b.order() {
            if used[w] || (0..i).any(|u| s.has_edge(u, i) && !b.has_edge(map[u], w)) {
                continue;
            }
            used[w] = true;
            map[i] = w;
            if go(s, b, map, used, i + 1) {
                return true;
            }
            used[w] = false;
        }
        false
    }
    small.order() <= big.order() && go(small, big, &mut map, &mut used, 0)
}

/// Every vertex set of size at most `h` is tried as a cover.
pub fn brute_vertex_cover(g: &Graph, h: usize) -> bool {
    let n = g.order();
    let edges: Vec<(usize, usize)> = g.edges().collect();
    (0u64..1 << n)
        .filter(|m| m.count_ones() as usize <= h)
        .any(|m| edges.iter().all(|&(u, v)| m >> u & 1 == 1 || m >> v & 1 == 1))
}
