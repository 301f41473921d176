use std::collections::BTreeMap;
use std::error::Error;
use std::fs::File;
use std::io::{self, BufRead, BufReader, Write};
use std::ops::RangeInclusive;
use std::path::Path;

use serde_json::{json, Value};

use linforest_core::enumerate::{enumerate_graphs, ingest_graph6_stream, Connectivity, EnumFilter, IngestOptions};
use linforest_core::recognize::recognize_exception;
use linforest_core::verify::{
    classify, classify_under, sharpness_demo, sweep_many, turan_search, LemmaId, SharpnessCase, Source, SweepJob,
    SweepOptions, SweepReport, Target, TheoremId, Verdict,
};
use linforest_core::{contains_linear_forest, parse_forest, FamilyKind, FamilySpec, Graph, LinearForest};

use crate::{Command, Format, GraphInput, OutputArgs, RunArgs};

type Result<T> = std::result::Result<T, Box<dyn Error>>;

/// Largest order a graph6 source can carry.
const MAX_INPUT_ORDER: usize = 62;

pub fn run(command: Command) -> Result<u8> {
    match command {
        Command::Gen { family, params, output } => gen(&family, &params, &output),
        Command::Recognize { family, h, input, output } => recognize(&family, h, &input, &output),
        Command::Contains { forest, input, output } => contains(&forest.forest, &input, &output),
        Command::Classify { forest, theorem, input, output } => {
            classify_cmd(&forest.forest, theorem.as_deref(), &input, &output)
        }
        Command::Sweep { theorem, forest, run, output } => sweep(&theorem, forest.as_deref(), &run, &output),
        Command::Lemma { id, list, run, output } => lemma(id.as_deref(), list, &run, &output),
        Command::Turan { forest, n, output } => turan(&forest.forest, n, &output),
        Command::Sharpness { case, size, q, output } => sharpness(case.as_deref(), size, q, &output),
        Command::Enumerate { n, min_degree, connectivity, count, output } => {
            enumerate(n, min_degree, &connectivity, count, &output)
        }
    }
}

/// Collects output and writes it once to stdout or `--out`.
struct Sink {
    text: String,
    json: Vec<Value>,
    format: Format,
}

impl Sink {
    fn new(output: &OutputArgs) -> Sink {
        Sink { text: String::new(), json: Vec::new(), format: output.format }
    }

    fn line(&mut self, text: impl AsRef<str>) {
        self.text.push_str(text.as_ref());
        if !self.text.ends_with('\n') {
            self.text.push('\n');
        }
    }

    fn value(&mut self, v: Value) {
        self.json.push(v);
    }

    /// JSON output: one value per line, so graph streams stay line-oriented.
    fn finish(self, output: &OutputArgs) -> Result<()> {
        let body = match self.format {
            Format::Text => self.text,
            Format::Json => self.json.iter().map(|v| format!("{v}\n")).collect(),
        };
        write_out(&body, output)
    }
}

fn write_out(body: &str, output: &OutputArgs) -> Result<()> {
    match &output.out {
        Some(path) => std::fs::write(path, body).map_err(|e| format!("cannot write {}: {e}", path.display()))?,
        None => {
            let mut stdout = io::stdout().lock();
            stdout.write_all(body.as_bytes())?;
            stdout.flush()?;
        }
    }
    Ok(())
}

fn forest(text: &str) -> Result<LinearForest> {
    parse_forest(text).map_err(|e| format!("bad --forest {text:?}: {e}").into())
}

fn parse_params(text: &str) -> Result<BTreeMap<String, usize>> {
    let mut out = BTreeMap::new();
    for item in text.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        let (k, v) = item.split_once('=').ok_or_else(|| format!("bad parameter {item:?}; expected name=value"))?;
        let v: usize = v.trim().parse().map_err(|_| format!("bad value in {item:?}"))?;
        if out.insert(k.trim().to_ascii_lowercase(), v).is_some() {
            return Err(format!("parameter {k:?} given twice").into());
        }
    }
    Ok(out)
}

/// Graphs from `--graph` strings or from `--input`, in input order.
/// Malformed lines are reported on stderr and skipped; the returned status is
/// 2 when any were skipped, so the run still ends as an input error.
fn read_graphs(input: &GraphInput) -> Result<(Vec<Graph>, u8)> {
    let text: Box<dyn BufRead> =
        if !input.graph.is_empty() { Box::new(io::Cursor::new(input.graph.join("\n"))) } else { open(&input.input)? };
    let mut stream = ingest_graph6_stream(text, IngestOptions::default());
    let graphs: Vec<Graph> = stream.by_ref().collect();
    for e in stream.errors() {
        eprintln!("linforest: skipped input {e}");
    }
    Ok((graphs, if stream.errors().is_empty() { 0 } else { 2 }))
}

fn open(path: &Path) -> Result<Box<dyn BufRead>> {
    if path.as_os_str() == "-" {
        return Ok(Box::new(BufReader::new(io::stdin())));
    }
    let f = File::open(path).map_err(|e| format!("cannot read {}: {e}", path.display()))?;
    Ok(Box::new(BufReader::new(f)))
}

fn gen(family: &str, params: &str, output: &OutputArgs) -> Result<u8> {
    let kind: FamilyKind = family.parse()?;
    let spec = FamilySpec::from_params(kind, &parse_params(params)?)?;
    let g = spec.generate()?;
    let mut sink = Sink::new(output);
    sink.line(g.to_graph6());
    sink.value(json!({
        "spec": spec,
        "graph6": g.to_graph6(),
        "order": g.order(),
        "edges": g.edge_count(),
        "min_degree": g.min_degree(),
    }));
    sink.finish(output)?;
    Ok(0)
}

fn recognize(family: &str, h: usize, input: &GraphInput, output: &OutputArgs) -> Result<u8> {
    let kind: FamilyKind = family.parse()?;
    let mut sink = Sink::new(output);
    let (graphs, status) = read_graphs(input)?;
    for g in graphs {
        let m = recognize_exception(&g, kind, h);
        match &m {
            Some(m) => sink.line(format!("{}\tmatch {} witness {:?}", g.to_graph6(), m.spec, m.witness)),
            None => sink.line(format!("{}\tno match", g.to_graph6())),
        }
        sink.value(json!({ "graph6": g.to_graph6(), "family": kind, "h": h, "matched": m.is_some(), "match": m }));
    }
    sink.finish(output)?;
    Ok(status)
}

fn contains(forest_text: &str, input: &GraphInput, output: &OutputArgs) -> Result<u8> {
    let f = forest(forest_text)?;
    let mut sink = Sink::new(output);
    let (graphs, status) = read_graphs(input)?;
    for g in graphs {
        let cert = contains_linear_forest(&g, &f);
        match &cert {
            Some(c) => {
                let paths: Vec<String> =
                    c.paths.iter().map(|p| p.iter().map(|v| v.to_string()).collect::<Vec<_>>().join("-")).collect();
                sink.line(format!("yes {}", paths.join(" ")));
            }
            None => sink.line("no"),
        }
        sink.value(
            json!({ "graph6": g.to_graph6(), "forest": f.orders(), "contains": cert.is_some(), "certificate": cert }),
        );
    }
    sink.finish(output)?;
    Ok(status)
}

fn verdict_text(v: &Verdict) -> String {
    match v {
        Verdict::Contains { .. } => "contains".into(),
        Verdict::Exception { matched } => format!("exception {}", matched.spec),
        Verdict::Violation { below_threshold: true, .. } => "anomaly (below the order threshold)".into(),
        Verdict::Violation { .. } => "VIOLATION".into(),
        Verdict::HypothesisNotMet { reason } => format!("hypothesis not met: {reason}"),
    }
}

fn classify_cmd(forest_text: &str, theorem: Option<&str>, input: &GraphInput, output: &OutputArgs) -> Result<u8> {
    let f = forest(forest_text)?;
    let forced: Option<TheoremId> = theorem.map(str::parse).transpose()?;
    let mut sink = Sink::new(output);
    let (graphs, status) = read_graphs(input)?;
    let mut code = 0;
    for g in graphs {
        let (t, v) = match forced {
            Some(t) => (t, classify_under(t, &f, &g)?),
            None => classify(&f, &g)?,
        };
        if matches!(v, Verdict::Violation { below_threshold: false, .. }) {
            code = 1;
        }
        sink.line(format!("{}\t{t}\t{}", g.to_graph6(), verdict_text(&v)));
        let mut value = json!({ "graph6": g.to_graph6(), "forest": f.orders(), "theorem": t });
        if let (Value::Object(obj), Value::Object(extra)) = (&mut value, serde_json::to_value(&v)?) {
            obj.extend(extra);
        }
        sink.value(value);
    }
    sink.finish(output)?;
    Ok(code.max(status))
}

/// Order range and graph source shared by `sweep` and `lemma`.
fn plan(run: &RunArgs) -> Result<(RangeInclusive<usize>, Source, SweepOptions)> {
    let source = match &run.input {
        Some(path) => Source::Graph6 { path: path.clone(), dedup: run.dedup },
        None => Source::Enumerate,
    };
    let range = match (run.n, &run.range) {
        (Some(n), _) => n..=n,
        (None, Some(r)) => r.clone(),
        (None, None) if run.input.is_some() => 0..=MAX_INPUT_ORDER,
        (None, None) => return Err("built-in enumeration needs --n or --range".into()),
    };
    Ok((range, source, SweepOptions { jobs: run.jobs, timings: run.timings }))
}

fn emit_report(report: &SweepReport, output: &OutputArgs) -> Result<u8> {
    let body = match output.format {
        Format::Text => report.to_text(),
        Format::Json => report.to_json() + "\n",
    };
    write_out(&body, output)?;
    Ok(report.exit_code() as u8)
}

fn sweep(theorem: &str, forest_text: Option<&str>, run: &RunArgs, output: &OutputArgs) -> Result<u8> {
    let key = theorem.to_ascii_lowercase().replace('_', "-");
    let target = if key == "eg-bound" || key == "egbound" {
        if forest_text.is_some() {
            return Err("eg-bound takes no --forest".into());
        }
        Target::EdgeBound
    } else {
        let t: TheoremId = theorem.parse()?;
        let f = forest(forest_text.ok_or("--forest is required for theorem sweeps")?)?;
        Target::Theorem(t, f)
    };
    let (range, source, opts) = plan(run)?;
    let report = sweep_many(&[SweepJob::new(target, range)], &source, &opts)?.remove(0);
    emit_report(&report, output)
}

fn lemma(id: Option<&str>, list: bool, run: &RunArgs, output: &OutputArgs) -> Result<u8> {
    if list {
        let mut sink = Sink::new(output);
        for l in LemmaId::ALL {
            sink.line(format!("{:<15} {}", l.name(), l.statement()));
            sink.value(json!({ "id": l.name(), "statement": l.statement() }));
        }
        sink.finish(output)?;
        return Ok(0);
    }
    let id: LemmaId = id.ok_or("--id is required")?.parse()?;
    let (range, source, opts) = plan(run)?;
    let report = sweep_many(&[SweepJob::new(Target::Lemma(id), range)], &source, &opts)?.remove(0);
    emit_report(&report, output)
}

fn turan(forest_text: &str, n: usize, output: &OutputArgs) -> Result<u8> {
    let f = forest(forest_text)?;
    let report = turan_search(&f, n)?;
    let body = match output.format {
        Format::Text => report.to_text(),
        Format::Json => serde_json::to_string_pretty(&report)? + "\n",
    };
    write_out(&body, output)?;
    Ok(0)
}

fn sharpness(case: Option<&str>, size: Option<usize>, q: Option<usize>, output: &OutputArgs) -> Result<u8> {
    let cases: Vec<SharpnessCase> = match case {
        Some(c) => vec![c.parse()?],
        None if size.is_some() || q.is_some() => return Err("--size and --q need --case".into()),
        None => SharpnessCase::ALL.to_vec(),
    };
    let mut sink = Sink::new(output);
    let mut code = 0;
    for c in cases {
        let report = sharpness_demo(c, size, q)?;
        if !report.certified {
            code = 1;
        }
        sink.line(report.to_text());
        sink.value(serde_json::to_value(&report)?);
    }
    sink.finish(output)?;
    Ok(code)
}

fn enumerate(n: usize, min_degree: usize, connectivity: &str, count: bool, output: &OutputArgs) -> Result<u8> {
    let conn: Connectivity = connectivity.parse()?;
    let stream = enumerate_graphs(EnumFilter::new(n, min_degree, conn))?;
    let mut sink = Sink::new(output);
    if count {
        let total = stream.count();
        sink.line(total.to_string());
        sink.value(json!({ "n": n, "min_degree": min_degree, "connectivity": conn, "count": total }));
    } else {
        for g in stream {
            let g6 = g.to_graph6();
            sink.value(Value::String(g6.clone()));
            sink.line(g6);
        }
    }
    sink.finish(output)?;
    Ok(0)
}
