//! Standard constructions: complete, empty, cycle, path, join, union, complement.

use crate::graph::{bit, full_mask, Graph, GraphError, MAX_ORDER};

/// One assembly step.
#[derive(Debug, Clone)]
pub enum Assemble {
    Complete(usize),
    Empty(usize),
    Cycle(usize),
    Path(usize),
    Join(Graph, Graph),
    DisjointUnion(Vec<Graph>),
    Complement(Graph),
    Copies(usize, Graph),
}

pub fn assemble(op: Assemble) -> Result<Graph, GraphError> {
    match op {
        Assemble::Complete(n) => complete(n),
        Assemble::Empty(n) => Graph::empty(n),
        Assemble::Cycle(n) => cycle(n),
        Assemble::Path(n) => path(n),
        Assemble::Join(g, h) => join(&g, &h),
        Assemble::DisjointUnion(gs) => disjoint_union(&gs),
        Assemble::Complement(g) => Ok(complement(&g)),
        Assemble::Copies(k, g) => copies(k, &g),
    }
}

pub fn complete(n: usize) -> Result<Graph, GraphError> {
    Ok(complement(&Graph::empty(n)?))
}

/// Cycle on `n >= 3` vertices in order `0, 1, ..., n-1`.
pub fn cycle(n: usize) -> Result<Graph, GraphError> {
    if n < 3 {
        return Err(GraphError::InvalidConstruction(format!("a cycle needs at least 3 vertices, got {n}")));
    }
    Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n)))
}

/// Path `0 - 1 - ... - n-1`.
pub fn path(n: usize) -> Result<Graph, GraphError> {
    Graph::from_edges(n, (1..n).map(|i| (i - 1, i)))
}

pub fn complement(g: &Graph) -> Graph {
    let all = g.vertex_mask();
    let adj = (0..g.order()).map(|v| all & !g.adj(v) & !bit(v)).collect();
    Graph::from_adjacency_unchecked(adj)
}

/// Disjoint union; vertices of later graphs are shifted past earlier ones.
pub fn disjoint_union(gs: &[Graph]) -> Result<Graph, GraphError> {
    let n: usize = gs.iter().map(Graph::order).sum();
    if n > MAX_ORDER {
        return Err(GraphError::UnsupportedOrder(n));
    }
    let mut adj = Vec::with_capacity(n);
    let mut offset = 0;
    for g in gs {
        adj.extend(g.adjacency().iter().map(|&a| a << offset));
        offset += g.order();
    }
    Ok(Graph::from_adjacency_unchecked(adj))
}

/// `g` on the first vertices, `h` after, every cross pair adjacent.
pub fn join(g: &Graph, h: &Graph) -> Result<Graph, GraphError> {
    let u = disjoint_union(&[g.clone(), h.clone()])?;
    let (a, b) = (g.order(), h.order());
    let left = full_mask(a);
    let right = full_mask(a + b) & !left;
    let adj = (0..a + b).map(|v| u.adj(v) | if v < a { right } else { left }).collect();
    Ok(Graph::from_adjacency_unchecked(adj))
}

pub fn copies(k: usize, g: &Graph) -> Result<Graph, GraphError> {
    disjoint_union(&vec![g.clone(); k])
}
