//! Canonical labeling by individualization and equitable refinement.
//!
//! The search tree is explored depth first. Leaves are compared by their
//! relabeled adjacency; the lexicographically largest one is canonical.
//! Automorphisms discovered on the way prune sibling subtrees (orbit pruning)
//! and whole branches (jumping back to the node where two equivalent leaves
//! diverge). The collected automorphisms generate the full automorphism group.

use std::collections::VecDeque;

use crate::graph::{bit, Bits, Graph};

/// Result of canonical labeling.
#[derive(Debug, Clone)]
pub struct Canon {
    /// `lab[i]` is the vertex placed at canonical position `i`.
    pub lab: Vec<usize>,
    /// `pos[v]` is the canonical position of vertex `v`.
    pub pos: Vec<usize>,
    /// Adjacency of the canonically relabeled graph.
    pub form: Vec<u64>,
    /// Generators of the automorphism group, as vertex maps.
    pub generators: Vec<Vec<usize>>,
}

impl Canon {
    pub fn canonical_graph(&self) -> Graph {
        Graph::from_adjacency_unchecked(self.form.clone())
    }

    /// Orbit representative (smallest member) of every vertex.
    pub fn orbits(&self) -> Vec<usize> {
        orbits(self.lab.len(), self.generators.iter())
    }
}

/// Refines `cells` until it is equitable with respect to every queued splitter.
fn refine(adj: &[u64], cells: &mut Vec<u64>, splitters: impl IntoIterator<Item = u64>) {
    let n = adj.len();
    let mut queue: VecDeque<u64> = splitters.into_iter().collect();
    let mut buckets = [0u64; 64];
    while let Some(w) = queue.pop_front() {
        if cells.len() == n {
            return;
        }
        let mut i = 0;
        while i < cells.len() {
            let c = cells[i];
            if c & (c - 1) == 0 {
                i += 1;
                continue;
            }
            let (mut lo, mut hi) = (usize::MAX, 0usize);
            for v in Bits(c) {
                let k = (adj[v] & w).count_ones() as usize;
                buckets[k] |= bit(v);
                lo = lo.min(k);
                hi = hi.max(k);
            }
            if lo == hi {
                buckets[lo] = 0;
                i += 1;
                continue;
            }
            let mut parts = Vec::new();
            for b in &mut buckets[lo..=hi] {
                if *b != 0 {
                    parts.push(*b);
                    queue.push_back(*b);
                    *b = 0;
                }
            }
            let added = parts.len();
            cells.splice(i..=i, parts);
            i += added;
        }
    }
}

struct Leaf {
    lab: Vec<usize>,
    form: Vec<u64>,
    path: Vec<usize>,
}

struct Search<'a> {
    adj: &'a [u64],
    path: Vec<usize>,
    first: Option<Leaf>,
    best: Option<Leaf>,
    generators: Vec<Vec<usize>>,
}

impl Search<'_> {
    fn leaf(&self, cells: &[u64]) -> Leaf {
        let n = self.adj.len();
        let lab: Vec<usize> = cells.iter().map(|c| c.trailing_zeros() as usize).collect();
        let mut pos = vec![0usize; n];
        for (i, &v) in lab.iter().enumerate() {
            pos[v] = i;
        }
        let form = lab.iter().map(|&v| Bits(self.adj[v]).fold(0u64, |acc, u| acc | bit(pos[u]))).collect();
        Leaf { lab, form, path: self.path.clone() }
    }

    fn record_automorphism(&mut self, from: &[usize], to: &[usize]) {
        let mut gamma = vec![0usize; from.len()];
        for (&a, &b) in from.iter().zip(to) {
            gamma[a] = b;
        }
        if gamma.iter().enumerate().any(|(i, &g)| i != g) {
            self.generators.push(gamma);
        }
    }

    fn diverge(&self, other: &[usize]) -> usize {
        self.path.iter().zip(other).take_while(|(a, b)| a == b).count()
    }

    /// Returns the level to unwind to, if an automorphism allows skipping ahead.
    fn visit(&mut self, cells: Vec<u64>) -> Option<usize> {
        let n = self.adj.len();
        let level = self.path.len();
        if cells.len() == n {
            let leaf = self.leaf(&cells);
            let Some(first) = &self.first else {
                self.best = Some(Leaf { lab: leaf.lab.clone(), form: leaf.form.clone(), path: leaf.path.clone() });
                self.first = Some(leaf);
                return None;
            };
            if leaf.form == first.form {
                let (flab, fpath) = (first.lab.clone(), first.path.clone());
                self.record_automorphism(&flab, &leaf.lab);
                return Some(self.diverge(&fpath));
            }
            let best = self.best.as_ref().expect("best leaf is set with the first leaf");
            return match leaf.form.cmp(&best.form) {
                std::cmp::Ordering::Greater => {
                    self.best = Some(leaf);
                    None
                }
                std::cmp::Ordering::Equal => {
                    let (blab, bpath) = (best.lab.clone(), best.path.clone());
                    self.record_automorphism(&blab, &leaf.lab);
                    Some(self.diverge(&bpath))
                }
                std::cmp::Ordering::Less => None,
            };
        }

        let mut target = usize::MAX;
        let mut size = u32::MAX;
        for (i, c) in cells.iter().enumerate() {
            let s = c.count_ones();
            if s > 1 && s < size {
                size = s;
                target = i;
            }
        }
        let cell = cells[target];
        let mut explored = 0u64;
        for v in Bits(cell) {
            if explored != 0 && self.pruned(v, explored) {
                continue;
            }
            explored |= bit(v);
            let mut child = cells.clone();
            child.splice(target..=target, [bit(v), cell & !bit(v)]);
            refine(self.adj, &mut child, [bit(v)]);
            self.path.push(v);
            let jump = self.visit(child);
            self.path.pop();
            if let Some(l) = jump {
                if l < level {
                    return Some(l);
                }
            }
        }
        None
    }

    /// True when `v` lies in the orbit of an explored sibling under the
    /// automorphisms found so far that fix the current path pointwise.
    fn pruned(&self, v: usize, explored: u64) -> bool {
        let fixing = self.generators.iter().filter(|g| self.path.iter().all(|&p| g[p] == p));
        let mut orbit = bit(v);
        let gens: Vec<&Vec<usize>> = fixing.collect();
        if gens.is_empty() {
            return false;
        }
        let mut frontier = orbit;
        while frontier != 0 {
            let mut next = 0u64;
            for u in Bits(frontier) {
                for g in &gens {
                    next |= bit(g[u]);
                }
            }
            next &= !orbit;
            orbit |= next;
            frontier = next;
            if orbit & explored != 0 {
                return true;
            }
        }
        false
    }
}

/// Computes the canonical form and automorphism generators of `g`.
pub fn canonical_form(g: &Graph) -> Canon {
    let adj = g.adjacency();
    let n = adj.len();
    if n == 0 {
        return Canon { lab: vec![], pos: vec![], form: vec![], generators: vec![] };
    }
    let mut cells = vec![g.vertex_mask()];
    refine(adj, &mut cells, [g.vertex_mask()]);
    let mut search = Search { adj, path: Vec::new(), first: None, best: None, generators: Vec::new() };
    search.visit(cells);
    let best = search.best.expect("search reaches at least one leaf");
    let mut pos = vec![0usize; n];
    for (i, &v) in best.lab.iter().enumerate() {
        pos[v] = i;
    }
    Canon { lab: best.lab, pos, form: best.form, generators: search.generators }
}

/// Canonical byte string: equal exactly for isomorphic graphs.
pub fn canonical_label(g: &Graph) -> Vec<u8> {
    canonical_form(g).canonical_graph().to_graph6().into_bytes()
}

/// graph6 text of the canonical relabeling of `g`.
pub fn canonical_graph6(g: &Graph) -> String {
    canonical_form(g).canonical_graph().to_graph6()
}

pub fn are_isomorphic(g: &Graph, h: &Graph) -> bool {
    if g.order() != h.order() || g.edge_count() != h.edge_count() {
        return false;
    }
    let mut dg = g.degrees();
    let mut dh = h.degrees();
    dg.sort_unstable();
    dh.sort_unstable();
    dg == dh && canonical_form(g).form == canonical_form(h).form
}

/// Smallest member of each vertex's orbit under the group generated by `gens`.
pub fn orbits<'a>(n: usize, gens: impl Iterator<Item = &'a Vec<usize>>) -> Vec<usize> {
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut [usize], mut x: usize) -> usize {
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    for g in gens {
        for (v, &w) in g.iter().enumerate() {
            let (a, b) = (find(&mut parent, v), find(&mut parent, w));
            if a != b {
                let (lo, hi) = if a < b { (a, b) } else { (b, a) };
                parent[hi] = lo;
            }
        }
    }
    (0..n).map(|v| find(&mut parent, v)).collect()
}
