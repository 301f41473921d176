//! Blocks, cut vertices and end blocks via the lowpoint DFS.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{bit, Bits, Graph};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BlockDecomposition {
    /// Bitset of cut vertices.
    pub cut_vertices: u64,
    /// Vertex sets of the blocks, sorted.
    pub blocks: Vec<u64>,
    /// Indices into `blocks` of blocks containing exactly one cut vertex.
    pub end_blocks: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConnectivityReport {
    pub connected: bool,
    pub two_connected: bool,
    pub blocks: BlockDecomposition,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BlockError {
    #[error("vertex set {0:#x} is not an end block of the graph")]
    NotEndBlock(u64),
    #[error("the two end blocks must be distinct")]
    SameBlock,
}

/// Splits `g` into blocks. Isolated vertices form singleton blocks.
pub fn block_decomposition(g: &Graph) -> BlockDecomposition {
    let n = g.order();
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0usize; n];
    let mut time = 0usize;
    let mut blocks: Vec<u64> = Vec::new();
    let mut edge_stack: Vec<(usize, usize)> = Vec::new();
    // frame: (vertex, parent, remaining neighbors)
    let mut stack: Vec<(usize, usize, u64)> = Vec::new();

    for root in 0..n {
        if disc[root] != usize::MAX {
            continue;
        }
        if g.adj(root) == 0 {
            disc[root] = time;
            time += 1;
            blocks.push(bit(root));
            continue;
        }
        disc[root] = time;
        low[root] = time;
        time += 1;
        stack.push((root, usize::MAX, g.adj(root)));
        while let Some(frame) = stack.last_mut() {
            let (v, parent, rest) = *frame;
            if rest != 0 {
                let w = rest.trailing_zeros() as usize;
                frame.2 &= rest - 1;
                if w == parent {
                    continue;
                }
                if disc[w] == usize::MAX {
                    edge_stack.push((v, w));
                    disc[w] = time;
                    low[w] = time;
                    time += 1;
                    stack.push((w, v, g.adj(w)));
                } else if disc[w] < disc[v] {
                    edge_stack.push((v, w));
                    low[v] = low[v].min(disc[w]);
                }
            } else {
                stack.pop();
                if parent == usize::MAX {
                    continue;
                }
                low[parent] = low[parent].min(low[v]);
                if low[v] >= disc[parent] {
                    let mut set = 0u64;
                    while let Some((a, b)) = edge_stack.pop() {
                        set |= bit(a) | bit(b);
                        if (a, b) == (parent, v) {
                            break;
                        }
                    }
                    blocks.push(set);
                }
            }
        }
    }

    blocks.sort_unstable();
    let mut seen = 0u64;
    let mut cut_vertices = 0u64;
    for &b in &blocks {
        cut_vertices |= seen & b;
        seen |= b;
    }
    let end_blocks =
        blocks.iter().enumerate().filter(|(_, &b)| (b & cut_vertices).count_ones() == 1).map(|(i, _)| i).collect();
    BlockDecomposition { cut_vertices, blocks, end_blocks }
}

pub fn connectivity_report(g: &Graph) -> ConnectivityReport {
    let blocks = block_decomposition(g);
    let connected = g.is_connected();
    let two_connected = g.order() >= 3 && connected && blocks.cut_vertices == 0;
    ConnectivityReport { connected, two_connected, blocks }
}

pub fn is_two_connected(g: &Graph) -> bool {
    g.order() >= 3 && g.is_connected() && cut_vertices(g) == 0
}

/// Bitset of cut vertices.
pub fn cut_vertices(g: &Graph) -> u64 {
    block_decomposition(g).cut_vertices
}

/// Order of a longest path between the cut vertices of two distinct end blocks
/// (1 when both end blocks hang on the same cut vertex).
pub fn block_path_order(g: &Graph, b1: u64, b2: u64) -> Result<usize, BlockError> {
    let dec = block_decomposition(g);
    let cut_of = |b: u64| -> Result<usize, BlockError> {
        let is_end = dec.end_blocks.iter().any(|&i| dec.blocks[i] == b);
        if !is_end {
            return Err(BlockError::NotEndBlock(b));
        }
        Ok((b & dec.cut_vertices).trailing_zeros() as usize)
    };
    let c1 = cut_of(b1)?;
    let c2 = cut_of(b2)?;
    if b1 == b2 {
        return Err(BlockError::SameBlock);
    }
    if c1 == c2 {
        return Ok(1);
    }
    Ok(crate::engine::longest_path_between(g, c1, c2).map_or(0, |p| p.len()))
}

/// Number of blocks each vertex belongs to.
pub fn block_membership(dec: &BlockDecomposition, n: usize) -> Vec<usize> {
    let mut count = vec![0; n];
    for &b in &dec.blocks {
        for v in Bits(b) {
            count[v] += 1;
        }
    }
    count
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bowtie() -> Graph {
        Graph::from_edges(5, [(0, 1), (0, 2), (1, 2), (0, 3), (0, 4), (3, 4)]).unwrap()
    }

    #[test]
    fn bowtie_blocks() {
        let r = connectivity_report(&bowtie());
        assert!(r.connected && !r.two_connected);
        assert_eq!(r.blocks.cut_vertices, 1);
        assert_eq!(r.blocks.blocks, vec![0b00111, 0b11001]);
        assert_eq!(r.blocks.end_blocks, vec![0, 1]);
        assert_eq!(block_path_order(&bowtie(), 0b00111, 0b11001), Ok(1));
    }

    #[test]
    fn path_blocks_are_edges() {
        let p4 = Graph::from_edges(4, [(0, 1), (1, 2), (2, 3)]).unwrap();
        let d = block_decomposition(&p4);
        assert_eq!(d.blocks, vec![0b0011, 0b0110, 0b1100]);
        assert_eq!(d.cut_vertices, 0b0110);
        assert_eq!(block_path_order(&p4, 0b0011, 0b1100), Ok(2));
        assert_eq!(block_path_order(&p4, 0b0110, 0b1100), Err(BlockError::NotEndBlock(0b0110)));
    }

    #[test]
    fn cycle_is_one_block() {
        let c6 = Graph::from_edges(6, (0..6).map(|i| (i, (i + 1) % 6))).unwrap();
        let r = connectivity_report(&c6);
        assert!(r.two_connected);
        assert_eq!(r.blocks.blocks, vec![0b111111]);
    }

    #[test]
    fn isolated_vertices_are_singleton_blocks() {
        let g = Graph::from_edges(3, [(0, 1)]).unwrap();
        let d = block_decomposition(&g);
        assert_eq!(d.blocks, vec![0b011, 0b100]);
        assert_eq!(d.cut_vertices, 0);
    }
}
