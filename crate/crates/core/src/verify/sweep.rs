use std::fs::File;
use std::io::{BufReader, Read};
use std::ops::RangeInclusive;
use std::path::PathBuf;
use std::time::Instant;

use rayon::prelude::*;
use thiserror::Error;

use crate::enumerate::{enumerate_graphs, ingest_graph6_stream, Connectivity, EnumError, EnumFilter, IngestOptions};
use crate::forest::LinearForest;
use crate::graph::Graph;

use super::classify::{classify_with, hypothesis_failure, ClassifyError, TheoremId, Verdict};
use super::eg::EdgeBoundCheck;
use super::info::GraphInfo;
use super::lemmas::{lemma_check, run_constructive, LemmaId};
use super::report::{FilterLabel, SourceLabel, Subject, SweepReport, Tally};

/// Graphs per parallel batch.
const BATCH: usize = 4096;

/// Adjacency convention stated in every report.
pub const CONVENTION: &str = "G ⊆ X means G is a spanning subgraph of the member of X with the same order as G; \
G = X means G is isomorphic to that member";

/// Graphs a check wants to see.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Universe {
    pub min_degree: usize,
    pub connectivity: Connectivity,
}

impl Universe {
    pub fn admits(&self, info: &GraphInfo) -> bool {
        if info.min_degree() < self.min_degree {
            return false;
        }
        match self.connectivity {
            Connectivity::Any => true,
            Connectivity::Connected => info.connected(),
            Connectivity::TwoConnected => info.two_connected(),
            Connectivity::HasCutVertex => info.has_cut_vertex(),
        }
    }

    pub fn label(&self) -> FilterLabel {
        FilterLabel { min_degree: self.min_degree, connectivity: self.connectivity }
    }
}

/// A per-graph check run over a stream of graphs.
pub trait GraphCheck: Sync {
    fn universe(&self) -> Universe;
    fn check(&self, info: &GraphInfo, tally: &mut Tally);
    /// Fills the descriptive fields of the report.
    fn describe(&self, report: &mut SweepReport);
}

/// Classification of every graph under one theorem.
pub struct TheoremCheck {
    pub theorem: TheoremId,
    pub forest: LinearForest,
}

impl TheoremCheck {
    pub fn new(theorem: TheoremId, forest: LinearForest) -> Result<TheoremCheck, ClassifyError> {
        let class = forest.params().theorem_class;
        if class != theorem.forest_class() {
            return Err(match class {
                crate::forest::TheoremClass::OutOfTheoremScope => ClassifyError::OutOfTheoremScope(forest.to_string()),
                found => ClassifyError::WrongClass { forest: forest.to_string(), theorem, found },
            });
        }
        Ok(TheoremCheck { theorem, forest })
    }
}

impl GraphCheck for TheoremCheck {
    fn universe(&self) -> Universe {
        let connectivity = match self.theorem {
            TheoremId::Even | TheoremId::OneOdd => Connectivity::Connected,
            TheoremId::TwoOdd2Conn => Connectivity::TwoConnected,
            TheoremId::TwoOddCut => Connectivity::HasCutVertex,
        };
        Universe { min_degree: self.forest.h(), connectivity }
    }

    fn check(&self, info: &GraphInfo, tally: &mut Tally) {
        if hypothesis_failure(self.theorem, &self.forest, info).is_some() {
            return;
        }
        let verdict = classify_with(self.theorem, &self.forest, info).expect("forest class checked at construction");
        match verdict {
            Verdict::Contains { .. } => tally.holds(info.n(), true),
            Verdict::Exception { matched } => tally.exception(info.graph, matched.family.name(), true),
            Verdict::Violation { below_threshold: true, .. } => tally.anomaly(info.graph),
            Verdict::Violation { .. } => tally.violation(info.graph),
            Verdict::HypothesisNotMet { .. } => {}
        }
    }

    fn describe(&self, report: &mut SweepReport) {
        let h = self.forest.h();
        report.forest = Some(self.forest.orders().to_vec());
        report.h = Some(h);
        report.order_threshold = Some(self.theorem.order_threshold(h));
        report.convention = CONVENTION.to_string();
        let kinds: Vec<&str> = self.theorem.exceptions(&self.forest).iter().map(|(k, _)| k.name()).collect();
        report.notes.push(format!(
            "exceptions admitted for this forest: {}",
            if kinds.is_empty() { "none".to_string() } else { kinds.join(", ") }
        ));
        report.notes.push(format!("hypotheses: n >= {}, minimum degree >= {h}", self.theorem.order_floor(h)));
        match self.theorem {
            TheoremId::TwoOdd2Conn => {
                report.notes.push(format!(
                    "classification asserted only for n >= {}; failures below that order are counted as anomalies",
                    self.theorem.order_threshold(h)
                ));
                if self.forest.orders() == [4, 3, 3] {
                    report.notes.push(
                        "one statement of the K2MATCH case writes (n-3)/2 copies of K2 for even n; read as (n-2)/2"
                            .into(),
                    );
                }
            }
            TheoremId::TwoOddCut if h == 1 => report.notes.push(
                "h = 1 uses the small-order list for 2P3: U3 with h = 1 (isomorphism) or a subgraph of LGEN with h = 1"
                    .into(),
            ),
            _ => {}
        }
    }
}

/// Where graphs come from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Source {
    /// Built-in generation, one graph per isomorphism class.
    Enumerate,
    /// graph6 lines from a file, or standard input for `-`.
    Graph6 { path: PathBuf, dedup: bool },
}

impl Source {
    pub fn label(&self) -> SourceLabel {
        match self {
            Source::Enumerate => SourceLabel::Enumerate,
            Source::Graph6 { path, .. } => SourceLabel::Graph6 { path: path.display().to_string() },
        }
    }
}

#[derive(Debug, Error)]
pub enum SweepError {
    #[error(transparent)]
    Enumerate(#[from] EnumError),
    #[error("cannot read {path}: {source}")]
    Source { path: String, source: std::io::Error },
    #[error(transparent)]
    Classify(#[from] ClassifyError),
    #[error("unknown lemma {0:?}")]
    UnknownLemma(String),
    #[error("empty order range {0}..={1}")]
    EmptyRange(usize, usize),
    #[error("cannot start worker threads: {0}")]
    Threads(String),
}

#[derive(Debug, Clone, Default)]
pub struct SweepOptions {
    /// Worker threads; 0 uses every available core.
    pub jobs: usize,
    /// Record wall time in reports.
    pub timings: bool,
}

/// What to sweep.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Target {
    Theorem(TheoremId, LinearForest),
    Lemma(LemmaId),
    EdgeBound,
}

/// One sweep sharing a graph stream with others.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SweepJob {
    pub target: Target,
    pub orders: RangeInclusive<usize>,
}

impl SweepJob {
    pub fn new(target: Target, orders: RangeInclusive<usize>) -> SweepJob {
        SweepJob { target, orders }
    }

    fn subject(&self) -> Subject {
        match &self.target {
            Target::Theorem(t, _) => Subject::Theorem { id: t.name().to_string() },
            Target::Lemma(l) => Subject::Lemma { id: l.name().to_string() },
            Target::EdgeBound => Subject::EdgeBound,
        }
    }

    fn check(&self) -> Result<Option<Box<dyn GraphCheck>>, SweepError> {
        Ok(match &self.target {
            Target::Theorem(t, f) => Some(Box::new(TheoremCheck::new(*t, f.clone())?)),
            Target::Lemma(l) => lemma_check(*l),
            Target::EdgeBound => Some(Box::new(EdgeBoundCheck)),
        })
    }
}

struct Runner<'a> {
    checks: Vec<(&'a dyn GraphCheck, RangeInclusive<usize>)>,
    tallies: Vec<Tally>,
    pool: rayon::ThreadPool,
}

impl Runner<'_> {
    fn feed(&mut self, batch: &[Graph]) {
        let k = self.checks.len();
        let checks = &self.checks;
        let partial = self.pool.install(|| {
            batch
                .par_iter()
                .fold(
                    || vec![Tally::default(); k],
                    |mut acc, g| {
                        let info = GraphInfo::new(g);
                        for (i, (check, orders)) in checks.iter().enumerate() {
                            if orders.contains(&g.order()) && check.universe().admits(&info) {
                                check.check(&info, &mut acc[i]);
                            }
                        }
                        acc
                    },
                )
                .reduce(
                    || vec![Tally::default(); k],
                    |mut a, b| {
                        for (x, y) in a.iter_mut().zip(b) {
                            x.merge(y);
                        }
                        a
                    },
                )
        });
        for (x, y) in self.tallies.iter_mut().zip(partial) {
            x.merge(y);
        }
    }

    fn feed_stream(&mut self, graphs: impl Iterator<Item = Graph>) {
        let mut batch = Vec::with_capacity(BATCH);
        for g in graphs {
            batch.push(g);
            if batch.len() == BATCH {
                self.feed(&batch);
                batch.clear();
            }
        }
        if !batch.is_empty() {
            self.feed(&batch);
        }
    }
}

/// Loosest enumeration filter that still covers every check active at `n`.
fn union_filter(n: usize, active: &[Universe]) -> EnumFilter {
    let min_degree = active.iter().map(|u| u.min_degree).min().unwrap_or(0);
    let first = active.first().map_or(Connectivity::Any, |u| u.connectivity);
    let connectivity = if active.iter().all(|u| u.connectivity == first) {
        first
    } else if active.iter().all(|u| u.connectivity != Connectivity::Any) {
        Connectivity::Connected
    } else {
        Connectivity::Any
    };
    EnumFilter::new(n, min_degree, connectivity)
}

fn open(path: &PathBuf) -> Result<Box<dyn Read>, SweepError> {
    if path.as_os_str() == "-" {
        return Ok(Box::new(std::io::stdin()));
    }
    File::open(path)
        .map(|f| Box::new(f) as Box<dyn Read>)
        .map_err(|source| SweepError::Source { path: path.display().to_string(), source })
}

/// Runs several sweeps over one pass of the graph source.
pub fn sweep_many(jobs: &[SweepJob], source: &Source, opts: &SweepOptions) -> Result<Vec<SweepReport>, SweepError> {
    let start = Instant::now();
    for job in jobs {
        if job.orders.is_empty() {
            return Err(SweepError::EmptyRange(*job.orders.start(), *job.orders.end()));
        }
    }
    let boxed: Vec<Option<Box<dyn GraphCheck>>> = jobs.iter().map(SweepJob::check).collect::<Result<_, _>>()?;
    let mut checks = Vec::new();
    let mut slot = Vec::new();
    for (i, b) in boxed.iter().enumerate() {
        if let Some(c) = b {
            slot.push(Some(checks.len()));
            checks.push((c.as_ref(), jobs[i].orders.clone()));
        } else {
            slot.push(None);
        }
    }
    let mut builder = rayon::ThreadPoolBuilder::new();
    if opts.jobs > 0 {
        builder = builder.num_threads(opts.jobs);
    }
    let pool = builder.build().map_err(|e| SweepError::Threads(e.to_string()))?;
    let mut runner = Runner { tallies: vec![Tally::default(); checks.len()], checks, pool };
    let mut notes = Vec::new();

    if !runner.checks.is_empty() {
        match source {
            Source::Enumerate => {
                let lo = runner.checks.iter().map(|(_, r)| *r.start()).min().unwrap_or(0);
                let hi = runner.checks.iter().map(|(_, r)| *r.end()).max().unwrap_or(0);
                for n in lo..=hi {
                    let active: Vec<Universe> =
                        runner.checks.iter().filter(|(_, r)| r.contains(&n)).map(|(c, _)| c.universe()).collect();
                    if active.is_empty() {
                        continue;
                    }
                    let stream = enumerate_graphs(union_filter(n, &active))?;
                    runner.feed_stream(stream);
                }
            }
            Source::Graph6 { path, dedup } => {
                let reader = BufReader::new(open(path)?);
                let mut stream = ingest_graph6_stream(reader, IngestOptions { dedup: *dedup, ..Default::default() });
                runner.feed_stream(stream.by_ref());
                for e in stream.errors() {
                    notes.push(format!("skipped input: {e}"));
                }
            }
        }
    }

    let elapsed = start.elapsed().as_millis() as u64;
    let mut reports = Vec::with_capacity(jobs.len());
    for (i, job) in jobs.iter().enumerate() {
        let range = [*job.orders.start(), *job.orders.end()];
        let mut report = match slot[i] {
            Some(c) => {
                let (check, _) = runner.checks[c];
                let mut r = SweepReport::new(
                    job.subject(),
                    range,
                    check.universe().label(),
                    source.label(),
                    &runner.tallies[c],
                );
                check.describe(&mut r);
                r.notes.extend(notes.iter().cloned());
                r
            }
            None => match &job.target {
                Target::Lemma(id) => run_constructive(*id, job.orders.clone()),
                _ => unreachable!("only lemmas can be constructive"),
            },
        };
        if opts.timings {
            report.wall_time_ms = Some(elapsed);
        }
        reports.push(report);
    }
    Ok(reports)
}

/// Sweeps one theorem for one forest.
pub fn sweep_theorem(
    theorem: TheoremId,
    forest: &LinearForest,
    orders: RangeInclusive<usize>,
    source: &Source,
    opts: &SweepOptions,
) -> Result<SweepReport, SweepError> {
    let job = SweepJob::new(Target::Theorem(theorem, forest.clone()), orders);
    Ok(sweep_many(&[job], source, opts)?.remove(0))
}

/// Checks one lemma on every instance in the order range.
pub fn verify_lemma(
    id: &str,
    orders: RangeInclusive<usize>,
    source: &Source,
    opts: &SweepOptions,
) -> Result<SweepReport, SweepError> {
    let id: LemmaId = id.parse().map_err(|_| SweepError::UnknownLemma(id.to_string()))?;
    Ok(sweep_many(&[SweepJob::new(Target::Lemma(id), orders)], source, opts)?.remove(0))
}

/// Checks the edge bound for paths on every graph in the order range.
pub fn eg_edge_bound_check(
    orders: RangeInclusive<usize>,
    source: &Source,
    opts: &SweepOptions,
) -> Result<SweepReport, SweepError> {
    Ok(sweep_many(&[SweepJob::new(Target::EdgeBound, orders)], source, opts)?.remove(0))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::forest::parse_forest;

    #[test]
    fn even_two_p2_at_six() {
        let f = parse_forest("2,2").unwrap();
        let r = sweep_theorem(TheoremId::Even, &f, 6..=6, &Source::Enumerate, &SweepOptions::default()).unwrap();
        assert_eq!(r.counts.checked, 112);
        assert_eq!(r.counts.contains, 111);
        assert_eq!(r.counts.exceptions.get("S"), Some(&1));
        assert_eq!(r.counts.violations, 0);
        assert!(r.counts.is_balanced());
        assert_eq!(r.counts.certificates_validated, 112);
    }

    #[test]
    fn parallel_runs_are_identical() {
        let f = parse_forest("3,2").unwrap();
        let one =
            sweep_theorem(TheoremId::OneOdd, &f, 5..=7, &Source::Enumerate, &SweepOptions { jobs: 1, timings: false })
                .unwrap();
        let many =
            sweep_theorem(TheoremId::OneOdd, &f, 5..=7, &Source::Enumerate, &SweepOptions { jobs: 3, timings: false })
                .unwrap();
        assert_eq!(one.to_json(), many.to_json());
        assert_eq!(one.counts.violations, 0);
    }

    #[test]
    fn wrong_forest_class_is_rejected() {
        let f = parse_forest("3,3").unwrap();
        assert!(matches!(
            sweep_theorem(TheoremId::Even, &f, 6..=6, &Source::Enumerate, &SweepOptions::default()),
            Err(SweepError::Classify(ClassifyError::WrongClass { .. }))
        ));
    }
}
