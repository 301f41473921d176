use crate::graph::{bit, Bits, Graph};

/// Finds `S ⊆ P` with `|S| = s` whose common neighborhood outside `P` has at
/// least `m` vertices. For `s = 0` the common neighborhood is all of `V ∖ P`.
pub fn common_neighborhood_find(g: &Graph, p: u64, s: usize, m: usize) -> Option<u64> {
    let p = p & g.vertex_mask();
    let outside = g.vertex_mask() & !p;
    let members: Vec<usize> = Bits(p).collect();
    if s > members.len() {
        return None;
    }
    fn rec(g: &Graph, members: &[usize], start: usize, left: usize, chosen: u64, common: u64, m: usize) -> Option<u64> {
        if (common.count_ones() as usize) < m {
            return None;
        }
        if left == 0 {
            return Some(chosen);
        }
        for i in start..=members.len() - left {
            let v = members[i];
            if let Some(found) = rec(g, members, i + 1, left - 1, chosen | bit(v), common & g.adj(v), m) {
                return Some(found);
            }
        }
        None
    }
    rec(g, &members, 0, s, 0, outside, m)
}
