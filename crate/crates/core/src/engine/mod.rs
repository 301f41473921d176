//! Exact search procedures: linear-forest packing, longest paths and cycles,
//! subgraph monomorphism and the common-neighborhood finder.

mod containment;
mod cycles;
mod mono;
mod nbhd;
mod paths;

pub use containment::{contains_linear_forest, validate_certificate, CertificateError, EmbeddingCertificate};
pub use cycles::{for_each_longest_cycle, has_cycle_at_least, longest_cycle, longest_cycles};
pub use mono::{find_monomorphism, is_monomorphism, monomorphism_exists, EngineError};
pub use nbhd::common_neighborhood_find;
pub use paths::{longest_path, longest_path_between, path_at_least};
