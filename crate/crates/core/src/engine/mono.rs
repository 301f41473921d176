use thiserror::Error;

use crate::graph::{bit, Bits, Graph};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EngineError {
    #[error("pattern has {small} vertices but host has only {big}")]
    OrderMismatch { small: usize, big: usize },
}

/// An injective edge-preserving map from `small` into `big`, if one exists.
/// `map[v]` is the image of pattern vertex `v`.
pub fn find_monomorphism(small: &Graph, big: &Graph) -> Result<Option<Vec<usize>>, EngineError> {
    let (ns, nb) = (small.order(), big.order());
    if ns > nb {
        return Err(EngineError::OrderMismatch { small: ns, big: nb });
    }
    if small.edge_count() > big.edge_count() {
        return Ok(None);
    }
    let mut ds = small.degrees();
    let mut db = big.degrees();
    ds.sort_unstable_by(|a, b| b.cmp(a));
    db.sort_unstable_by(|a, b| b.cmp(a));
    if ds.iter().zip(&db).any(|(s, b)| s > b) {
        return Ok(None);
    }

    // Match order: start from a maximum-degree vertex, then always the vertex
    // with the most already-ordered neighbors.
    let mut order = Vec::with_capacity(ns);
    let mut placed = 0u64;
    while order.len() < ns {
        let v = (0..ns)
            .filter(|&v| placed & bit(v) == 0)
            .max_by_key(|&v| ((small.adj(v) & placed).count_ones(), small.degree(v), std::cmp::Reverse(v)))
            .expect("unplaced vertex exists");
        order.push(v);
        placed |= bit(v);
    }
    let mut by_degree: Vec<u64> =
        (0..ns).map(|d| (0..nb).filter(|&u| big.degree(u) >= d).fold(0, |m, u| m | bit(u))).collect();
    if by_degree.is_empty() {
        by_degree.push(0);
    }
    let mut st = Mono { small, big, order: &order, by_degree, map: vec![usize::MAX; ns] };
    if st.assign(0, 0) {
        Ok(Some(st.map))
    } else {
        Ok(None)
    }
}

pub fn monomorphism_exists(small: &Graph, big: &Graph) -> Result<bool, EngineError> {
    Ok(find_monomorphism(small, big)?.is_some())
}

/// Checks that `map` is an injective edge-preserving map from `small` into `big`.
pub fn is_monomorphism(small: &Graph, big: &Graph, map: &[usize]) -> bool {
    if map.len() != small.order() || map.iter().any(|&v| v >= big.order()) {
        return false;
    }
    let image = map.iter().fold(0u64, |m, &v| m | bit(v));
    image.count_ones() as usize == map.len() && small.edges().all(|(u, v)| big.has_edge(map[u], map[v]))
}

struct Mono<'a> {
    small: &'a Graph,
    big: &'a Graph,
    order: &'a [usize],
    by_degree: Vec<u64>,
    map: Vec<usize>,
}

impl Mono<'_> {
    fn assign(&mut self, i: usize, used: u64) -> bool {
        if i == self.order.len() {
            return true;
        }
        let v = self.order[i];
        let mut cand = self.by_degree[self.small.degree(v)] & !used;
        for u in Bits(self.small.adj(v)) {
            let img = self.map[u];
            if img != usize::MAX {
                cand &= self.big.adj(img);
            }
        }
        for w in Bits(cand) {
            self.map[v] = w;
            if self.assign(i + 1, used | bit(w)) {
                return true;
            }
        }
        self.map[v] = usize::MAX;
        false
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::build::{complete, cycle, path};

    #[test]
    fn path_into_triangle() {
        let m = find_monomorphism(&path(3).unwrap(), &complete(3).unwrap()).unwrap().unwrap();
        assert!(is_monomorphism(&path(3).unwrap(), &complete(3).unwrap(), &m));
    }

    #[test]
    fn order_mismatch() {
        assert_eq!(
            monomorphism_exists(&complete(4).unwrap(), &complete(3).unwrap()),
            Err(EngineError::OrderMismatch { small: 4, big: 3 })
        );
    }

    #[test]
    fn cycle_not_in_path() {
        assert!(!monomorphism_exists(&cycle(4).unwrap(), &path(6).unwrap()).unwrap());
    }
}
