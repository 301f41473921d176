use std::collections::HashSet;

use crate::graph::{bit, reach, Bits, Graph};

/// Memo entries beyond this are not recorded; the search stays exact.
const MEMO_LIMIT: usize = 1 << 20;

struct PathSearch<'a> {
    adj: &'a [u64],
    best: Vec<usize>,
    goal: usize,
    memo: HashSet<(usize, u64)>,
}

impl PathSearch<'_> {
    fn dfs(&mut self, path: &mut Vec<usize>, used: u64) {
        if path.len() > self.best.len() {
            self.best = path.clone();
        }
        if self.best.len() >= self.goal {
            return;
        }
        let last = *path.last().expect("path is never empty here");
        let avail = !used;
        let bound = path.len() + reach(self.adj, last, avail).count_ones() as usize - 1;
        if bound <= self.best.len() {
            return;
        }
        if self.memo.len() < MEMO_LIMIT && !self.memo.insert((last, used)) {
            return;
        }
        for u in Bits(self.adj[last] & avail) {
            path.push(u);
            self.dfs(path, used | bit(u));
            path.pop();
            if self.best.len() >= self.goal {
                return;
            }
        }
    }
}

/// Longest path of `g` as `(order, vertices)`. With an anchor the path must
/// end at that vertex (the returned sequence ends with it).
pub fn longest_path(g: &Graph, anchor: Option<usize>) -> (usize, Vec<usize>) {
    let n = g.order();
    if n == 0 {
        return (0, Vec::new());
    }
    let adj = g.adjacency();
    let mut search = PathSearch { adj, best: Vec::new(), goal: 0, memo: HashSet::new() };
    match anchor {
        Some(a) => {
            assert!(a < n, "anchor {a} out of range");
            search.goal = reach(adj, a, g.vertex_mask()).count_ones() as usize;
            search.dfs(&mut vec![a], bit(a));
            search.best.reverse();
        }
        None => {
            let largest = g.components().iter().map(|c| c.count_ones() as usize).max().unwrap_or(0);
            search.goal = largest;
            // Low-degree vertices are likely path ends; try them first.
            let mut starts: Vec<usize> = (0..n).collect();
            starts.sort_by_key(|&v| (g.degree(v), v));
            for s in starts {
                search.dfs(&mut vec![s], bit(s));
                if search.best.len() >= largest {
                    break;
                }
            }
        }
    }
    (search.best.len(), search.best)
}

/// Some path of order at least `t` (ending at `anchor` when given), or `None`
/// if every path is shorter.
pub fn path_at_least(g: &Graph, anchor: Option<usize>, t: usize) -> Option<Vec<usize>> {
    let n = g.order();
    if t == 0 {
        return Some(Vec::new());
    }
    if t > n {
        return None;
    }
    let adj = g.adjacency();
    let mut search = PathSearch { adj, best: Vec::new(), goal: t, memo: HashSet::new() };
    match anchor {
        Some(a) => {
            search.dfs(&mut vec![a], bit(a));
            search.best.reverse();
        }
        None => {
            let mut starts: Vec<usize> = (0..n).collect();
            starts.sort_by_key(|&v| (g.degree(v), v));
            for s in starts {
                if (reach(adj, s, g.vertex_mask()).count_ones() as usize) < t {
                    continue;
                }
                search.dfs(&mut vec![s], bit(s));
                if search.best.len() >= t {
                    break;
                }
            }
        }
    }
    (search.best.len() >= t).then_some(search.best)
}

/// A longest path from `a` to `b`, or `None` if they are disconnected.
pub fn longest_path_between(g: &Graph, a: usize, b: usize) -> Option<Vec<usize>> {
    if a == b {
        return Some(vec![a]);
    }
    let adj = g.adjacency();
    if reach(adj, a, g.vertex_mask()) & bit(b) == 0 {
        return None;
    }
    struct Between<'a> {
        adj: &'a [u64],
        target: usize,
        best: Vec<usize>,
        memo: HashSet<(usize, u64)>,
    }
    impl Between<'_> {
        fn dfs(&mut self, path: &mut Vec<usize>, used: u64) {
            let last = *path.last().expect("non-empty path");
            if last == self.target {
                if path.len() > self.best.len() {
                    self.best = path.clone();
                }
                return;
            }
            let avail = !used;
            let r = reach(self.adj, last, avail);
            if r & bit(self.target) == 0 {
                return;
            }
            if path.len() + r.count_ones() as usize - 1 <= self.best.len() {
                return;
            }
            if self.memo.len() < MEMO_LIMIT && !self.memo.insert((last, used)) {
                return;
            }
            for u in Bits(self.adj[last] & avail) {
                path.push(u);
                self.dfs(path, used | bit(u));
                path.pop();
            }
        }
    }
    let mut s = Between { adj, target: b, best: Vec::new(), memo: HashSet::new() };
    s.dfs(&mut vec![a], bit(a));
    Some(s.best)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::build::{cycle, path};

    #[test]
    fn cycle_and_path() {
        assert_eq!(longest_path(&cycle(6).unwrap(), None).0, 6);
        let (len, p) = longest_path(&path(5).unwrap(), Some(2));
        assert_eq!(len, 3);
        assert_eq!(*p.last().unwrap(), 2);
    }

    #[test]
    fn threshold_search() {
        let p = path(6).unwrap();
        assert_eq!(path_at_least(&p, None, 6).unwrap().len(), 6);
        assert!(path_at_least(&p, None, 7).is_none());
        let q = path_at_least(&p, Some(0), 4).unwrap();
        assert!(q.len() >= 4 && *q.last().unwrap() == 0);
    }

    #[test]
    fn between_on_cycle() {
        let c = cycle(6).unwrap();
        assert_eq!(longest_path_between(&c, 0, 1).unwrap().len(), 6);
        assert_eq!(longest_path_between(&c, 0, 3).unwrap().len(), 4);
        let two = Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
        assert_eq!(longest_path_between(&two, 0, 3), None);
    }
}
