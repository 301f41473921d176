use std::cell::{Cell, OnceCell, RefCell};

use crate::blocks::cut_vertices;
use crate::engine::{contains_linear_forest, has_cycle_at_least, longest_cycle, path_at_least, EmbeddingCertificate};
use crate::forest::LinearForest;
use crate::graph::Graph;

/// Lazily computed facts about one graph, shared by all checks run on it.
pub struct GraphInfo<'g> {
    pub graph: &'g Graph,
    min_degree: OnceCell<usize>,
    connected: OnceCell<bool>,
    cut_vertices: OnceCell<u64>,
    circumference: OnceCell<usize>,
    /// Largest length known to have a cycle at least that long.
    cycle_lo: Cell<usize>,
    /// Smallest length known to exceed every cycle.
    cycle_hi: Cell<usize>,
    /// Longest path found so far.
    path: RefCell<Vec<usize>>,
    /// Smallest order known to admit no path.
    no_path: Cell<usize>,
}

impl<'g> GraphInfo<'g> {
    pub fn new(graph: &'g Graph) -> GraphInfo<'g> {
        GraphInfo {
            graph,
            min_degree: OnceCell::new(),
            connected: OnceCell::new(),
            cut_vertices: OnceCell::new(),
            circumference: OnceCell::new(),
            cycle_lo: Cell::new(0),
            cycle_hi: Cell::new(graph.order() + 1),
            path: RefCell::new(Vec::new()),
            no_path: Cell::new(graph.order() + 1),
        }
    }

    pub fn n(&self) -> usize {
        self.graph.order()
    }

    pub fn min_degree(&self) -> usize {
        *self.min_degree.get_or_init(|| self.graph.min_degree())
    }

    pub fn connected(&self) -> bool {
        *self.connected.get_or_init(|| self.graph.is_connected())
    }

    pub fn cut_vertices(&self) -> u64 {
        *self.cut_vertices.get_or_init(|| cut_vertices(self.graph))
    }

    pub fn two_connected(&self) -> bool {
        self.n() >= 3 && self.connected() && self.cut_vertices() == 0
    }

    pub fn has_cut_vertex(&self) -> bool {
        self.connected() && self.cut_vertices() != 0
    }

    pub fn circumference(&self) -> usize {
        *self.circumference.get_or_init(|| longest_cycle(self.graph))
    }

    /// Whether some cycle has length at least `len`.
    pub fn has_cycle(&self, len: usize) -> bool {
        if let Some(&c) = self.circumference.get() {
            return c >= len;
        }
        if len <= self.cycle_lo.get() {
            return true;
        }
        if len >= self.cycle_hi.get() {
            return false;
        }
        let found = has_cycle_at_least(self.graph, len);
        if found {
            self.cycle_lo.set(len);
        } else {
            self.cycle_hi.set(len);
        }
        found
    }

    /// Whether some path has order at least `t`; results are cached.
    pub fn has_path(&self, t: usize) -> bool {
        if self.path.borrow().len() >= t {
            return true;
        }
        if t >= self.no_path.get() {
            return false;
        }
        match path_at_least(self.graph, None, t) {
            Some(p) => {
                *self.path.borrow_mut() = p;
                true
            }
            None => {
                self.no_path.set(t);
                false
            }
        }
    }

    /// Order of a longest path.
    pub fn longest_path_order(&self) -> usize {
        let mut lo = self.path.borrow().len();
        while lo + 1 < self.no_path.get() && self.has_path(lo + 1) {
            lo = self.path.borrow().len();
        }
        lo
    }

    /// Containment of `f`, splitting a long path when one exists.
    pub fn contains(&self, f: &LinearForest) -> Option<EmbeddingCertificate> {
        if self.has_path(f.total_order()) {
            let path = self.path.borrow();
            let mut paths = Vec::with_capacity(f.len());
            let mut at = 0;
            for &o in f.orders() {
                paths.push(path[at..at + o].to_vec());
                at += o;
            }
            return Some(EmbeddingCertificate { paths });
        }
        contains_linear_forest(self.graph, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::build::{cycle, path};
    use crate::engine::validate_certificate;
    use crate::forest::parse_forest;

    #[test]
    fn split_certificate_is_valid() {
        let g = cycle(8).unwrap();
        let info = GraphInfo::new(&g);
        let f = parse_forest("3,3,2").unwrap();
        let cert = info.contains(&f).unwrap();
        validate_certificate(&g, &f, &cert).unwrap();
        assert_eq!(info.longest_path_order(), 8);
    }

    #[test]
    fn path_cache_bounds() {
        let g = path(5).unwrap();
        let info = GraphInfo::new(&g);
        assert!(!info.has_path(6));
        assert!(info.has_path(5));
        assert_eq!(info.longest_path_order(), 5);
    }
}
