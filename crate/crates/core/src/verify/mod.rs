//! Theorem classification, exhaustive sweeps, lemma checks, the edge bound
//! for paths, extremal search and sharpness constructions.

mod classify;
mod eg;
mod info;
mod lemmas;
mod report;
mod sharpness;
mod sweep;
mod turan;

pub use classify::{classify, classify_under, hypothesis_failure, ClassifyError, TheoremId, Verdict};
pub use eg::forced_path_order;
pub use info::GraphInfo;
pub use lemmas::{glue_path, two_odd_forests, LemmaId};
pub use report::{
    Counts, FilterLabel, SourceLabel, Subject, SweepReport, Tally, CERTIFICATE_LIMIT, EXAMPLE_LIMIT, SCHEMA_VERSION,
};
pub use sharpness::{certify_sharpness, sharpness_demo, FamilyCheck, SharpnessCase, SharpnessError, SharpnessReport};
pub use sweep::{
    eg_edge_bound_check, sweep_many, sweep_theorem, verify_lemma, GraphCheck, Source, SweepError, SweepJob,
    SweepOptions, Target, TheoremCheck, Universe, CONVENTION,
};
pub use turan::{turan_search, Extremal, TuranReport};
