use serde::{Deserialize, Serialize};

use crate::canon::canonical_graph6;
use crate::enumerate::{enumerate_graphs, Connectivity, EnumError, EnumFilter};
use crate::families::FamilySpec;
use crate::forest::LinearForest;

use super::info::GraphInfo;
use super::report::SCHEMA_VERSION;

/// Largest edge count over a class of `F`-free graphs and every graph that
/// reaches it (canonical graph6, sorted).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Extremal {
    pub max_edges: usize,
    pub extremal: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TuranReport {
    pub schema_version: u32,
    pub forest: Vec<usize>,
    pub h: usize,
    pub n: usize,
    /// Over all graphs of order `n`.
    pub all: Extremal,
    /// Over connected graphs of order `n`; absent when none is `F`-free.
    pub connected: Option<Extremal>,
    /// `e(S(n,h))` when defined.
    pub s_edges: Option<usize>,
    /// `e(SPLUS(n,h))` when defined.
    pub splus_edges: Option<usize>,
    pub notes: Vec<String>,
}

impl TuranReport {
    pub fn to_text(&self) -> String {
        let f = self.forest.iter().map(|o| format!("P{o}")).collect::<Vec<_>>().join("+");
        let mut out = format!("forest {f}, h = {}, n = {}\n", self.h, self.n);
        out.push_str(&format!(
            "all graphs: max edges {}  ({} extremal)\n",
            self.all.max_edges,
            self.all.extremal.len()
        ));
        for g in &self.all.extremal {
            out.push_str(&format!("  {g}\n"));
        }
        match &self.connected {
            Some(c) => {
                out.push_str(&format!("connected: max edges {}  ({} extremal)\n", c.max_edges, c.extremal.len()));
                for g in &c.extremal {
                    out.push_str(&format!("  {g}\n"));
                }
            }
            None => out.push_str("connected: no F-free connected graph\n"),
        }
        if let Some(e) = self.s_edges {
            out.push_str(&format!("e(S(n,h)) = {e}\n"));
        }
        if let Some(e) = self.splus_edges {
            out.push_str(&format!("e(SPLUS(n,h)) = {e}\n"));
        }
        for note in &self.notes {
            out.push_str(&format!("note: {note}\n"));
        }
        out
    }
}

#[derive(Default)]
struct Best {
    edges: Option<usize>,
    graphs: Vec<String>,
}

impl Best {
    fn wants(&self, e: usize) -> bool {
        self.edges.map_or(true, |b| e >= b)
    }

    fn offer(&mut self, e: usize, g6: &str) {
        match self.edges {
            Some(b) if e < b => {}
            Some(b) if e == b => self.graphs.push(g6.to_string()),
            _ => {
                self.edges = Some(e);
                self.graphs = vec![g6.to_string()];
            }
        }
    }

    fn finish(mut self) -> Option<Extremal> {
        self.graphs.sort();
        self.edges.map(|max_edges| Extremal { max_edges, extremal: self.graphs })
    }
}

/// Exact maximum number of edges in an `F`-free graph of order `n`, over all
/// graphs and over connected ones, with every maximizer.
pub fn turan_search(f: &LinearForest, n: usize) -> Result<TuranReport, EnumError> {
    let mut all = Best::default();
    let mut conn = Best::default();
    for g in enumerate_graphs(EnumFilter::new(n, 0, Connectivity::Any))? {
        let e = g.edge_count();
        let info = GraphInfo::new(&g);
        let want_all = all.wants(e);
        let want_conn = conn.wants(e) && info.connected();
        if !want_all && !want_conn {
            continue;
        }
        if info.contains(f).is_some() {
            continue;
        }
        let g6 = canonical_graph6(&g);
        if want_all {
            all.offer(e, &g6);
        }
        if want_conn {
            conn.offer(e, &g6);
        }
    }
    let h = f.h();
    let s = FamilySpec::S { n, h };
    let splus = FamilySpec::Splus { n, h };
    Ok(TuranReport {
        schema_version: SCHEMA_VERSION,
        forest: f.orders().to_vec(),
        h,
        n,
        all: all.finish().expect("the empty graph is F-free"),
        connected: conn.finish(),
        s_edges: s.validate().ok().map(|_| s.edge_count()),
        splus_edges: splus.validate().ok().map(|_| splus.edge_count()),
        notes: vec!["the comparison with S and SPLUS is informational; the extremal result is asymptotic in n".into()],
    })
}
