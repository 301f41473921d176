//! Membership tests for the exceptional families.
//!
//! Membership always compares against the family member of the same order as
//! the input: `G ⊆ X` means `G` is a spanning subgraph of `X_n`, and `G = X`
//! means `G ≅ X_n`. Structural routes exist for `S`, `SPLUS`, `K2MATCH`,
//! `K3MATCH` and `LGEN`; the rest go through generated templates.

mod cover;

use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use cover::{is_vertex_cover, vertex_cover_at_most};

use crate::canon::{canonical_form, Canon};
use crate::engine::{find_monomorphism, is_monomorphism};
use crate::families::{instances_with_order, FamilyKind, FamilySpec};
use crate::graph::{bit, full_mask, Bits, Graph};

/// How the input relates to the family member.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Relation {
    /// Spanning subgraph of the member.
    Subgraph,
    /// Isomorphic to the member.
    Isomorphic,
}

impl FamilyKind {
    pub fn relation(self) -> Relation {
        match self {
            FamilyKind::L | FamilyKind::U3 | FamilyKind::Hnla => Relation::Isomorphic,
            _ => Relation::Subgraph,
        }
    }

    /// Whether a structural characterization is implemented.
    pub fn has_structural_route(self) -> bool {
        matches!(self, FamilyKind::S | FamilyKind::Splus | FamilyKind::K2match | FamilyKind::K3match | FamilyKind::Lgen)
    }
}

/// Certified membership of a graph in a family.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyMatch {
    pub family: FamilyKind,
    pub spec: FamilySpec,
    pub relation: Relation,
    /// Vertices of the input mapped onto the member's key vertices: the hub
    /// set for `S`-like families, the center for `L`-like ones.
    pub witness: Vec<usize>,
    /// `embedding[v]` is the member vertex that input vertex `v` maps to.
    pub embedding: Vec<usize>,
    /// Further parameter tuples that also match.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub other_matches: Vec<FamilySpec>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WitnessError {
    #[error("family parameters are invalid: {0}")]
    Params(String),
    #[error("embedding is not an edge-preserving bijection onto the family member")]
    NotEmbedding,
    #[error("edge counts differ, so the graphs are not isomorphic")]
    NotIsomorphic,
    #[error("witness does not match the embedding's key vertices")]
    WitnessMismatch,
}

impl FamilyMatch {
    /// Re-checks the match against `g` from scratch.
    pub fn verify(&self, g: &Graph) -> Result<(), WitnessError> {
        let member = self.spec.generate().map_err(|e| WitnessError::Params(e.to_string()))?;
        if member.order() != g.order() || !is_monomorphism(g, &member, &self.embedding) {
            return Err(WitnessError::NotEmbedding);
        }
        if self.relation == Relation::Isomorphic && member.edge_count() != g.edge_count() {
            return Err(WitnessError::NotIsomorphic);
        }
        let keys = self.spec.key_vertices();
        let mut expected: Vec<usize> = (0..g.order()).filter(|&v| keys.contains(&self.embedding[v])).collect();
        expected.sort_unstable();
        let mut got = self.witness.clone();
        got.sort_unstable();
        if expected != got {
            return Err(WitnessError::WitnessMismatch);
        }
        Ok(())
    }
}

struct Template {
    graph: Graph,
    canon: Canon,
}

fn template(spec: &FamilySpec) -> Option<Arc<Template>> {
    static CACHE: OnceLock<RwLock<HashMap<FamilySpec, Arc<Template>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(t) = cache.read().expect("template cache poisoned").get(spec) {
        return Some(Arc::clone(t));
    }
    let graph = spec.generate().ok()?;
    let canon = canonical_form(&graph);
    let t = Arc::new(Template { graph, canon });
    cache.write().expect("template cache poisoned").insert(*spec, Arc::clone(&t));
    Some(t)
}

fn build_match(spec: FamilySpec, embedding: Vec<usize>) -> FamilyMatch {
    let keys = spec.key_vertices();
    let witness = (0..embedding.len()).filter(|&v| keys.contains(&embedding[v])).collect();
    FamilyMatch {
        family: spec.kind(),
        spec,
        relation: spec.kind().relation(),
        witness,
        embedding,
        other_matches: vec![],
    }
}

/// Decides membership of `g` in the family `kind` with degree parameter `h`
/// (ignored by `H1`, `H2`, `K2MATCH`, `K3MATCH`; read as `a` for `HNLA`).
/// Uses the structural route where one exists.
pub fn recognize_exception(g: &Graph, kind: FamilyKind, h: usize) -> Option<FamilyMatch> {
    let n = g.order();
    match kind {
        FamilyKind::S => {
            let spec = FamilySpec::S { n, h };
            spec.validate().ok()?;
            let cover = vertex_cover_at_most(g, h)?;
            Some(build_match(spec, hub_embedding(n, cover, h, &[])))
        }
        FamilyKind::Splus => recognize_splus(g, h),
        FamilyKind::K2match => recognize_matched_join(g, 2),
        FamilyKind::K3match => recognize_matched_join(g, 3),
        FamilyKind::Lgen => {
            let mut found: Option<FamilyMatch> = None;
            for spec in instances_with_order(FamilyKind::Lgen, n, h) {
                if let Some(emb) = lgen_embedding(g, &spec) {
                    match &mut found {
                        None => found = Some(build_match(spec, emb)),
                        Some(m) => m.other_matches.push(spec),
                    }
                }
            }
            found
        }
        _ => recognize_by_template(g, kind, h),
    }
}

/// Membership by comparing against generated members of order `|V(g)|`:
/// isomorphism for `L`, `U3`, `HNLA`, monomorphism otherwise.
pub fn recognize_by_template(g: &Graph, kind: FamilyKind, h: usize) -> Option<FamilyMatch> {
    let n = g.order();
    let mut found: Option<FamilyMatch> = None;
    let mut gcanon: Option<Canon> = None;
    for spec in instances_with_order(kind, n, h) {
        let Some(t) = template(&spec) else { continue };
        let emb = match kind.relation() {
            Relation::Isomorphic => {
                if t.graph.edge_count() != g.edge_count() {
                    continue;
                }
                let gc = gcanon.get_or_insert_with(|| canonical_form(g));
                if gc.form != t.canon.form {
                    continue;
                }
                // Same canonical position means corresponding vertices.
                (0..n).map(|v| t.canon.lab[gc.pos[v]]).collect()
            }
            Relation::Subgraph => match find_monomorphism(g, &t.graph) {
                Ok(Some(map)) => map,
                _ => continue,
            },
        };
        match &mut found {
            None => found = Some(build_match(spec, emb)),
            Some(m) => m.other_matches.push(spec),
        }
    }
    found
}

/// Embedding into `S`/`S+`: `hubs` go to `0..h` (padded with further
/// vertices), the optional extra edge to `h, h+1`, the rest in order.
fn hub_embedding(n: usize, hubs: u64, h: usize, edge: &[usize]) -> Vec<usize> {
    let mut emb = vec![usize::MAX; n];
    let edge_mask = edge.iter().fold(0u64, |m, &v| m | bit(v));
    let mut hub_set = hubs;
    for v in Bits(full_mask(n) & !hubs & !edge_mask) {
        if (hub_set.count_ones() as usize) >= h {
            break;
        }
        hub_set |= bit(v);
    }
    let mut next = 0;
    for v in Bits(hub_set) {
        emb[v] = next;
        next += 1;
    }
    for &v in edge {
        emb[v] = next;
        next += 1;
    }
    for slot in emb.iter_mut().take(n) {
        if *slot == usize::MAX {
            *slot = next;
            next += 1;
        }
    }
    emb
}

fn recognize_splus(g: &Graph, h: usize) -> Option<FamilyMatch> {
    let n = g.order();
    let spec = FamilySpec::Splus { n, h };
    spec.validate().ok()?;
    if let Some(cover) = vertex_cover_at_most(g, h) {
        return Some(build_match(spec, hub_embedding(n, cover, h, &[])));
    }
    let mut h_without = g.clone();
    for (u, v) in g.edges() {
        h_without.clear_edge(u, v);
        let found = vertex_cover_at_most(&h_without, h);
        h_without.set_edge(u, v);
        // Any cover of G - uv misses u and v, since G itself has no small cover.
        if let Some(cover) = found {
            return Some(build_match(spec, hub_embedding(n, cover, h, &[u, v])));
        }
    }
    None
}

fn recognize_matched_join(g: &Graph, core: usize) -> Option<FamilyMatch> {
    let n = g.order();
    let spec = if core == 2 { FamilySpec::K2match { n } } else { FamilySpec::K3match { n } };
    spec.validate().ok()?;
    let adj = g.adjacency();
    let all = g.vertex_mask();
    let mut hubs: Vec<usize> = Vec::with_capacity(core);
    fn choose(adj: &[u64], all: u64, core: usize, start: usize, hubs: &mut Vec<usize>) -> bool {
        if hubs.len() == core {
            let a = hubs.iter().fold(0u64, |m, &v| m | bit(v));
            let rest = all & !a;
            return Bits(rest).all(|v| (adj[v] & rest).count_ones() <= 1);
        }
        for v in start..adj.len() {
            hubs.push(v);
            if choose(adj, all, core, v + 1, hubs) {
                return true;
            }
            hubs.pop();
        }
        false
    }
    if !choose(adj, all, core, 0, &mut hubs) {
        return None;
    }
    let a = hubs.iter().fold(0u64, |m, &v| m | bit(v));
    let rest = all & !a;
    let mut emb = vec![usize::MAX; n];
    for (i, &v) in hubs.iter().enumerate() {
        emb[v] = i;
    }
    let mut next = core;
    for v in Bits(rest) {
        if emb[v] != usize::MAX {
            continue;
        }
        let partner = adj[v] & rest;
        if partner != 0 {
            let w = partner.trailing_zeros() as usize;
            emb[v] = next;
            emb[w] = next + 1;
            next += 2;
        }
    }
    // Unmatched vertices are paired up arbitrarily.
    for v in Bits(rest) {
        if emb[v] == usize::MAX {
            emb[v] = next;
            next += 1;
        }
    }
    Some(build_match(spec, emb))
}

/// Structural test for `G ⊆ LGEN(t1,t2,h)` on the same order: some apex `v`
/// such that the components of `G - v` pack exactly into `t1` bins of size `h`
/// and `t2` bins of size `h+1`.
fn lgen_embedding(g: &Graph, spec: &FamilySpec) -> Option<Vec<usize>> {
    let FamilySpec::Lgen { t1, t2, h } = *spec else { return None };
    let n = g.order();
    let all = g.vertex_mask();
    let mut caps = vec![h; t1];
    caps.extend(std::iter::repeat(h + 1).take(t2));
    for apex in 0..n {
        let rest = all & !bit(apex);
        // Non-neighbors of the apex are fine: the center is adjacent to all in
        // the member, and G only needs to be a subgraph.
        let mut comps = Vec::new();
        let mut left = rest;
        while left != 0 {
            let v = left.trailing_zeros() as usize;
            let c = g.reach(v, left);
            comps.push(c);
            left &= !c;
        }
        comps.sort_by_key(|c| std::cmp::Reverse(c.count_ones()));
        if comps.first().is_some_and(|c| c.count_ones() as usize > h + 1) {
            continue;
        }
        let mut remaining = caps.clone();
        let mut assign = vec![usize::MAX; comps.len()];
        if pack(&comps, 0, &mut remaining, &mut assign) {
            let mut emb = vec![usize::MAX; n];
            emb[apex] = 0;
            let mut offset = vec![0usize; caps.len()];
            let mut start = 1;
            for (b, &c) in caps.iter().enumerate() {
                offset[b] = start;
                start += c;
            }
            for (ci, &c) in comps.iter().enumerate() {
                let b = assign[ci];
                for v in Bits(c) {
                    emb[v] = offset[b];
                    offset[b] += 1;
                }
            }
            return Some(emb);
        }
    }
    None
}

fn pack(comps: &[u64], i: usize, remaining: &mut [usize], assign: &mut [usize]) -> bool {
    if i == comps.len() {
        return true;
    }
    let size = comps[i].count_ones() as usize;
    let mut tried: Vec<usize> = Vec::new();
    for b in 0..remaining.len() {
        let r = remaining[b];
        if r < size || tried.contains(&r) {
            continue;
        }
        tried.push(r);
        remaining[b] -= size;
        assign[i] = b;
        if pack(comps, i + 1, remaining, assign) {
            return true;
        }
        remaining[b] += size;
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::build::{complete, cycle, join};

    #[test]
    fn star_in_s() {
        let star = join(&complete(1).unwrap(), &Graph::empty(5).unwrap()).unwrap();
        let m = recognize_exception(&star, FamilyKind::S, 1).unwrap();
        assert_eq!(m.witness, vec![0]);
        m.verify(&star).unwrap();
    }

    #[test]
    fn c5_in_splus() {
        let c5 = cycle(5).unwrap();
        let m = recognize_exception(&c5, FamilyKind::Splus, 2).unwrap();
        m.verify(&c5).unwrap();
        assert!(recognize_exception(&c5, FamilyKind::S, 2).is_none());
    }

    #[test]
    fn bowtie_is_l22() {
        let bowtie = Graph::from_edges(5, [(0, 1), (0, 2), (1, 2), (0, 3), (0, 4), (3, 4)]).unwrap();
        let m = recognize_exception(&bowtie, FamilyKind::L, 2).unwrap();
        assert_eq!(m.spec, FamilySpec::L { t: 2, h: 2 });
        assert_eq!(m.witness, vec![0]);
        m.verify(&bowtie).unwrap();
    }

    #[test]
    fn c6_in_k2match() {
        let c6 = cycle(6).unwrap();
        let m = recognize_exception(&c6, FamilyKind::K2match, 0).unwrap();
        m.verify(&c6).unwrap();
        let a = m.witness.clone();
        assert!(!c6.has_edge(a[0], a[1]));
    }

    #[test]
    fn tampered_witness_fails() {
        let c5 = cycle(5).unwrap();
        let m = recognize_exception(&c5, FamilyKind::Splus, 2).unwrap();
        let mut no_witness = m.clone();
        no_witness.witness.clear();
        assert_eq!(no_witness.verify(&c5), Err(WitnessError::WitnessMismatch));
        let mut collapsed = m;
        collapsed.embedding[0] = collapsed.embedding[1];
        assert_eq!(collapsed.verify(&c5), Err(WitnessError::NotEmbedding));
    }
}
