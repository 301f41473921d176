use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::canon::canonical_graph6;
use crate::enumerate::Connectivity;
use crate::graph::Graph;

/// Version of the JSON layout documented in `docs/report-schema.md`.
pub const SCHEMA_VERSION: u32 = 1;

/// Examples kept per exception family.
pub const EXAMPLE_LIMIT: usize = 20;

/// Violation and anomaly certificates kept per report.
pub const CERTIFICATE_LIMIT: usize = 200;

/// Outcome counts. In lemma reports `contains` counts instances whose
/// conclusion held.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counts {
    pub checked: u64,
    pub contains: u64,
    pub exceptions: BTreeMap<String, u64>,
    pub violations: u64,
    pub below_threshold_anomalies: u64,
    /// Certificates and family witnesses re-validated after being produced.
    pub certificates_validated: u64,
}

impl Counts {
    pub fn exception_total(&self) -> u64 {
        self.exceptions.values().sum()
    }

    /// `checked = contains + exceptions + violations + anomalies`.
    pub fn is_balanced(&self) -> bool {
        self.checked == self.contains + self.exception_total() + self.violations + self.below_threshold_anomalies
    }

    pub fn merge(&mut self, other: &Counts) {
        self.checked += other.checked;
        self.contains += other.contains;
        for (k, v) in &other.exceptions {
            *self.exceptions.entry(k.clone()).or_default() += v;
        }
        self.violations += other.violations;
        self.below_threshold_anomalies += other.below_threshold_anomalies;
        self.certificates_validated += other.certificates_validated;
    }
}

/// Canonical graph6 of a certificate graph, ordered by order then text.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
struct Example(usize, String);

impl Example {
    fn of(g: &Graph) -> Example {
        Example(g.order(), canonical_graph6(g))
    }
}

fn keep_smallest(set: &mut BTreeSet<Example>, limit: usize) {
    while set.len() > limit {
        set.pop_last();
    }
}

/// Accumulator for one check. Merging is commutative and associative, so
/// per-worker tallies combine to the same result in any order.
#[derive(Debug, Clone, Default)]
pub struct Tally {
    by_order: BTreeMap<usize, Counts>,
    examples: BTreeMap<String, BTreeSet<Example>>,
    violations: BTreeSet<Example>,
    anomalies: BTreeSet<Example>,
}

impl Tally {
    fn at(&mut self, n: usize) -> &mut Counts {
        let c = self.by_order.entry(n).or_default();
        c.checked += 1;
        c
    }

    /// Conclusion held; `validated` if its certificate was re-checked.
    pub fn holds(&mut self, n: usize, validated: bool) {
        let c = self.at(n);
        c.contains += 1;
        c.certificates_validated += validated as u64;
    }

    pub fn exception(&mut self, g: &Graph, family: &str, validated: bool) {
        let c = self.at(g.order());
        *c.exceptions.entry(family.to_string()).or_default() += 1;
        c.certificates_validated += validated as u64;
        let set = self.examples.entry(family.to_string()).or_default();
        let ex = Example::of(g);
        if set.len() < EXAMPLE_LIMIT || set.last().map_or(true, |last| ex < *last) {
            set.insert(ex);
            keep_smallest(set, EXAMPLE_LIMIT);
        }
    }

    pub fn violation(&mut self, g: &Graph) {
        self.at(g.order()).violations += 1;
        self.violations.insert(Example::of(g));
        keep_smallest(&mut self.violations, CERTIFICATE_LIMIT);
    }

    pub fn anomaly(&mut self, g: &Graph) {
        self.at(g.order()).below_threshold_anomalies += 1;
        self.anomalies.insert(Example::of(g));
        keep_smallest(&mut self.anomalies, CERTIFICATE_LIMIT);
    }

    pub fn merge(&mut self, other: Tally) {
        for (n, c) in other.by_order {
            self.by_order.entry(n).or_default().merge(&c);
        }
        for (k, set) in other.examples {
            let mine = self.examples.entry(k).or_default();
            mine.extend(set);
            keep_smallest(mine, EXAMPLE_LIMIT);
        }
        self.violations.extend(other.violations);
        keep_smallest(&mut self.violations, CERTIFICATE_LIMIT);
        self.anomalies.extend(other.anomalies);
        keep_smallest(&mut self.anomalies, CERTIFICATE_LIMIT);
    }

    pub fn totals(&self) -> Counts {
        let mut total = Counts::default();
        for c in self.by_order.values() {
            total.merge(c);
        }
        total
    }

    pub fn by_order(&self) -> &BTreeMap<usize, Counts> {
        &self.by_order
    }

    pub fn violations(&self) -> u64 {
        self.by_order.values().map(|c| c.violations).sum()
    }
}

/// What a report is about.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Subject {
    Theorem { id: String },
    Lemma { id: String },
    EdgeBound,
}

/// Where the graphs came from.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SourceLabel {
    Enumerate,
    Graph6 { path: String },
    Constructed,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct FilterLabel {
    pub min_degree: usize,
    pub connectivity: Connectivity,
}

/// Serialized result of one sweep.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepReport {
    pub schema_version: u32,
    pub subject: Subject,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub forest: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub h: Option<usize>,
    /// Inclusive order range swept.
    pub n: [usize; 2],
    pub filter: FilterLabel,
    pub source: SourceLabel,
    /// Order from which failures count as violations.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub order_threshold: Option<u64>,
    pub convention: String,
    pub notes: Vec<String>,
    pub counts: Counts,
    pub by_order: BTreeMap<usize, Counts>,
    /// Up to 20 smallest canonical graph6 strings per family.
    pub exception_examples: BTreeMap<String, Vec<String>>,
    pub violation_certificates: Vec<String>,
    pub anomaly_certificates: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub wall_time_ms: Option<u64>,
}

impl SweepReport {
    pub fn new(
        subject: Subject,
        n: [usize; 2],
        filter: FilterLabel,
        source: SourceLabel,
        tally: &Tally,
    ) -> SweepReport {
        let strings = |set: &BTreeSet<Example>| set.iter().map(|e| e.1.clone()).collect::<Vec<_>>();
        SweepReport {
            schema_version: SCHEMA_VERSION,
            subject,
            forest: None,
            h: None,
            n,
            filter,
            source,
            order_threshold: None,
            convention: String::new(),
            notes: Vec::new(),
            counts: tally.totals(),
            by_order: tally.by_order.clone(),
            exception_examples: tally.examples.iter().map(|(k, v)| (k.clone(), strings(v))).collect(),
            violation_certificates: strings(&tally.violations),
            anomaly_certificates: strings(&tally.anomalies),
            wall_time_ms: None,
        }
    }

    /// Exit status: 0 when clean, 1 when violations were found.
    pub fn exit_code(&self) -> i32 {
        i32::from(self.counts.violations > 0)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports always serialize")
    }

    /// Plain-text rendering with the same counts as the JSON form.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let subject = match &self.subject {
            Subject::Theorem { id } => format!("theorem {id}"),
            Subject::Lemma { id } => format!("lemma {id}"),
            Subject::EdgeBound => "edge bound for paths".to_string(),
        };
        out.push_str(&format!("{subject}, n = {}..={}\n", self.n[0], self.n[1]));
        if let Some(f) = &self.forest {
            let f = f.iter().map(|o| format!("P{o}")).collect::<Vec<_>>().join("+");
            out.push_str(&format!("forest {f}, h = {}\n", self.h.unwrap_or(0)));
        }
        let c = &self.counts;
        out.push_str(&format!(
            "checked {}  contains {}  exceptions {}  violations {}  anomalies {}  validated {}\n",
            c.checked,
            c.contains,
            c.exception_total(),
            c.violations,
            c.below_threshold_anomalies,
            c.certificates_validated
        ));
        for (family, count) in &c.exceptions {
            out.push_str(&format!("  {family}: {count}\n"));
        }
        for (n, c) in &self.by_order {
            out.push_str(&format!(
                "  n={n}: checked {} contains {} exceptions {} violations {} anomalies {}\n",
                c.checked,
                c.contains,
                c.exception_total(),
                c.violations,
                c.below_threshold_anomalies
            ));
        }
        for g in &self.violation_certificates {
            out.push_str(&format!("violation {g}\n"));
        }
        for g in &self.anomaly_certificates {
            out.push_str(&format!("anomaly {g}\n"));
        }
        for note in &self.notes {
            out.push_str(&format!("note: {note}\n"));
        }
        if !self.convention.is_empty() {
            out.push_str(&format!("convention: {}\n", self.convention));
        }
        if let Some(ms) = self.wall_time_ms {
            out.push_str(&format!("wall time {ms} ms\n"));
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::build::{complete, cycle, path};

    #[test]
    fn merge_is_order_independent() {
        let graphs = [cycle(5).unwrap(), path(4).unwrap(), complete(4).unwrap(), cycle(4).unwrap()];
        let mut parts = [Tally::default(), Tally::default()];
        for (i, g) in graphs.iter().enumerate() {
            let t = &mut parts[i % 2];
            match i {
                0 => t.holds(g.order(), true),
                1 => t.exception(g, "S", true),
                2 => t.violation(g),
                _ => t.anomaly(g),
            }
        }
        let mut ab = parts[0].clone();
        ab.merge(parts[1].clone());
        let mut ba = parts[1].clone();
        ba.merge(parts[0].clone());
        let ra = SweepReport::new(
            Subject::EdgeBound,
            [4, 5],
            FilterLabel { min_degree: 0, connectivity: Connectivity::Any },
            SourceLabel::Enumerate,
            &ab,
        );
        let rb = SweepReport::new(
            Subject::EdgeBound,
            [4, 5],
            FilterLabel { min_degree: 0, connectivity: Connectivity::Any },
            SourceLabel::Enumerate,
            &ba,
        );
        assert_eq!(ra.to_json(), rb.to_json());
        assert!(ra.counts.is_balanced());
        assert_eq!(ra.counts.checked, 4);
        assert_eq!(ra.exit_code(), 1);
    }

    #[test]
    fn examples_keep_smallest() {
        let mut t = Tally::default();
        for n in (3..30).rev() {
            t.exception(&cycle(n).unwrap(), "X", false);
        }
        let r = SweepReport::new(
            Subject::EdgeBound,
            [3, 29],
            FilterLabel { min_degree: 0, connectivity: Connectivity::Any },
            SourceLabel::Enumerate,
            &t,
        );
        assert_eq!(r.exception_examples["X"].len(), EXAMPLE_LIMIT);
        assert_eq!(r.exception_examples["X"][0], canonical_graph6(&cycle(3).unwrap()));
    }
}
