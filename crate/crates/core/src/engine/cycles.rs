use crate::blocks::block_decomposition;
use crate::graph::{bit, full_mask, reach, Bits, Graph};

/// Cycle search inside one vertex set, cycles rooted at their smallest vertex.
struct CycleSearch<'a> {
    adj: &'a [u64],
    root: usize,
    best: usize,
    /// Stop as soon as a cycle of this length is found.
    goal: usize,
}

impl CycleSearch<'_> {
    fn dfs(&mut self, last: usize, len: usize, avail: u64) {
        if len >= 3 && self.adj[last] & bit(self.root) != 0 && len > self.best {
            self.best = len;
        }
        if self.best >= self.goal {
            return;
        }
        let r = reach(self.adj, last, avail);
        if len + r.count_ones() as usize - 1 <= self.best {
            return;
        }
        for u in Bits(self.adj[last] & avail) {
            self.dfs(u, len + 1, avail & !bit(u));
            if self.best >= self.goal {
                return;
            }
        }
    }
}

fn search_blocks(g: &Graph, goal: usize) -> usize {
    let adj = g.adjacency();
    let mut best = 0;
    let mut blocks = block_decomposition(g).blocks;
    blocks.sort_by_key(|b| std::cmp::Reverse(b.count_ones()));
    for block in blocks {
        let size = block.count_ones() as usize;
        if size < 3 || size <= best {
            continue;
        }
        let local: Vec<u64> = adj.iter().map(|&a| a & block).collect();
        for root in Bits(block) {
            let avail = block & !full_mask(root + 1);
            if (avail.count_ones() as usize) < best {
                break;
            }
            let mut s = CycleSearch { adj: &local, root, best, goal: goal.min(size) };
            s.dfs(root, 1, avail);
            best = s.best;
            if best >= goal || best == size {
                break;
            }
        }
        if best >= goal {
            break;
        }
    }
    best
}

/// Circumference of `g`; 0 for forests.
pub fn longest_cycle(g: &Graph) -> usize {
    search_blocks(g, usize::MAX)
}

/// Whether `g` has a cycle of length at least `len`.
pub fn has_cycle_at_least(g: &Graph, len: usize) -> bool {
    if len <= 3 {
        return len == 0 || search_blocks(g, 3) >= 3;
    }
    search_blocks(g, len) >= len
}

/// Calls `visit` on every longest cycle, each once, as a vertex sequence that
/// starts at its smallest vertex with its second vertex smaller than its last.
/// Stops early when `visit` returns `false`. Returns the circumference.
pub fn for_each_longest_cycle(g: &Graph, mut visit: impl FnMut(&[usize]) -> bool) -> usize {
    let c = longest_cycle(g);
    if c == 0 {
        return 0;
    }
    let adj = g.adjacency();
    let mut path = Vec::with_capacity(c);
    for root in 0..g.order() {
        let avail = g.vertex_mask() & !full_mask(root + 1);
        if (avail.count_ones() as usize) + 1 < c {
            break;
        }
        path.clear();
        path.push(root);
        if !enumerate_cycles(adj, c, &mut path, avail, &mut visit) {
            break;
        }
    }
    c
}

fn enumerate_cycles(
    adj: &[u64],
    c: usize,
    path: &mut Vec<usize>,
    avail: u64,
    visit: &mut impl FnMut(&[usize]) -> bool,
) -> bool {
    let last = *path.last().expect("non-empty");
    if path.len() == c {
        if adj[last] & bit(path[0]) != 0 && path[1] < last {
            return visit(path);
        }
        return true;
    }
    if path.len() + (reach(adj, last, avail).count_ones() as usize) - 1 < c {
        return true;
    }
    for u in Bits(adj[last] & avail) {
        path.push(u);
        let go_on = enumerate_cycles(adj, c, path, avail & !bit(u), visit);
        path.pop();
        if !go_on {
            return false;
        }
    }
    true
}

/// All longest cycles, in the orientation described at [`for_each_longest_cycle`].
pub fn longest_cycles(g: &Graph) -> (usize, Vec<Vec<usize>>) {
    let mut all = Vec::new();
    let c = for_each_longest_cycle(g, |cyc| {
        all.push(cyc.to_vec());
        true
    });
    (c, all)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::build::{complete, cycle};

    #[test]
    fn basic_circumference() {
        assert_eq!(longest_cycle(&cycle(7).unwrap()), 7);
        let star = Graph::from_edges(5, [(0, 1), (0, 2), (0, 3), (0, 4)]).unwrap();
        assert_eq!(longest_cycle(&star), 0);
        assert!(!has_cycle_at_least(&star, 3));
        assert!(has_cycle_at_least(&cycle(5).unwrap(), 5));
        assert!(!has_cycle_at_least(&cycle(5).unwrap(), 6));
    }

    #[test]
    fn k4_has_three_hamiltonian_cycles() {
        let (c, cycles) = longest_cycles(&complete(4).unwrap());
        assert_eq!(c, 4);
        assert_eq!(cycles.len(), 3);
    }

    #[test]
    fn bowtie_circumference_is_three() {
        let g = Graph::from_edges(5, [(0, 1), (0, 2), (1, 2), (0, 3), (0, 4), (3, 4)]).unwrap();
        let (c, cycles) = longest_cycles(&g);
        assert_eq!(c, 3);
        assert_eq!(cycles.len(), 2);
    }
}
