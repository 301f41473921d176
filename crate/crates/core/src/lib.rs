//! Verification toolkit for minimum-degree conditions that force linear
//! forests: exact containment, exceptional graph families, isomorph-free
//! enumeration, and exhaustive sweeps that check the classifications.

pub mod blocks;
pub mod build;
pub mod canon;
pub mod engine;
pub mod enumerate;
pub mod families;
pub mod forest;
pub mod graph;
pub mod graph6;
pub mod oracle;
pub mod recognize;
pub mod verify;

pub use blocks::{block_path_order, connectivity_report, BlockDecomposition, ConnectivityReport};
pub use build::{assemble, Assemble};
pub use canon::{are_isomorphic, canonical_label};
pub use engine::{contains_linear_forest, longest_cycle, longest_path, monomorphism_exists, EmbeddingCertificate};
pub use families::{generate_family, FamilyKind, FamilySpec};
pub use forest::{parse_forest, LinearForest, TheoremClass};
pub use graph::{degree_profile, Graph, GraphError};
pub use graph6::{parse_graph6, write_graph6};
pub use verify::{classify, sweep_theorem, verify_lemma, SweepReport, TheoremId, Verdict};
