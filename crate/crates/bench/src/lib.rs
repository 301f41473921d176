//! Fixtures shared by the benchmarks: named hosts and forests that exercise
//! the search engines at sizes where they do measurable work.

use linforest_core::build::{complete, cycle, join};
use linforest_core::enumerate::{enumerate_graphs, Connectivity, EnumFilter};
use linforest_core::{generate_family, parse_forest, FamilySpec, Graph, LinearForest};

/// A host graph with a label for benchmark ids.
pub struct Host {
    pub name: &'static str,
    pub graph: Graph,
}

fn family(spec: FamilySpec) -> Graph {
    generate_family(&spec).expect("fixture parameters are valid")
}

/// Hosts on which containment searches either succeed late or must exhaust
/// the search space.
pub fn containment_hosts() -> Vec<(Host, LinearForest)> {
    let forest = |s: &str| parse_forest(s).expect("fixture forest parses");
    vec![
        (Host { name: "S(20,4) vs 2P6", graph: family(FamilySpec::S { n: 20, h: 4 }) }, forest("6,6")),
        (Host { name: "L(5,3) vs P6+P4", graph: family(FamilySpec::L { t: 5, h: 3 }) }, forest("6,4")),
        (Host { name: "K2match(16) vs P9+P3", graph: family(FamilySpec::K2match { n: 16 }) }, forest("9,3")),
        (Host { name: "C24 vs 4P6", graph: cycle(24).expect("valid order") }, forest("6,6,6,6")),
    ]
}

/// Hosts for longest-cycle and canonical-labelling benchmarks.
pub fn structured_hosts() -> Vec<Host> {
    vec![
        Host { name: "S(24,5)", graph: family(FamilySpec::S { n: 24, h: 5 }) },
        Host { name: "L(6,3)", graph: family(FamilySpec::L { t: 6, h: 3 }) },
        Host { name: "TGLUE(2,2,3)", graph: family(FamilySpec::Tglue { t1: 2, t2: 2, h: 3 }) },
        Host {
            name: "K4 join C12",
            graph: join(&complete(4).expect("valid order"), &cycle(12).expect("valid order")).expect("order fits"),
        },
    ]
}

/// Every connected graph of order `n` with minimum degree 2.
pub fn connected_min2(n: usize) -> Vec<Graph> {
    enumerate_graphs(EnumFilter::new(n, 2, Connectivity::Connected)).expect("order within cap").collect()
}
