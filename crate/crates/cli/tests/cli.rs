use std::io::Write;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_linforest")).args(args).output().expect("binary runs")
}

fn run_with_stdin(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_linforest"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    child.stdin.take().unwrap().write_all(stdin.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

/// A `contains` line with every path written from its smaller end, since a
/// path may be reported in either direction.
fn oriented(line: &str) -> String {
    line.split(' ')
        .map(|tok| {
            let mut vs: Vec<&str> = tok.split('-').collect();
            if vs.len() > 1 && vs[0].parse::<usize>().unwrap() > vs[vs.len() - 1].parse::<usize>().unwrap() {
                vs.reverse();
            }
            vs.join("-")
        })
        .collect::<Vec<_>>()
        .join(" ")
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exited normally")
}

fn json_lines(o: &Output) -> Vec<Value> {
    stdout(o).lines().map(|l| serde_json::from_str(l).expect("one JSON value per line")).collect()
}

/// Edge count of a graph6 line, decoded here so the test does not lean on
/// the library's reader.
fn graph6_edges(line: &str) -> usize {
    let bytes = line.trim().as_bytes();
    let n = (bytes[0] - 63) as usize;
    let bits: Vec<bool> = bytes[1..].iter().flat_map(|b| (0..6).rev().map(move |i| (b - 63) >> i & 1 == 1)).collect();
    bits[..n * (n - 1) / 2].iter().filter(|b| **b).count()
}

#[test]
fn gen_s_7_2() {
    let o = run(&["gen", "--family", "s", "--params", "n=7,h=2"]);
    assert_eq!(code(&o), 0);
    let text = stdout(&o);
    assert_eq!(text.lines().count(), 1);
    assert_eq!(graph6_edges(&text), 11);

    let o = run(&["gen", "--family", "s", "--params", "n=7,h=2", "--format", "json"]);
    let v = &json_lines(&o)[0];
    assert_eq!((v["order"].as_u64(), v["edges"].as_u64(), v["min_degree"].as_u64()), (Some(7), Some(11), Some(2)));
    assert_eq!(v["graph6"].as_str().unwrap(), text.trim());
}

#[test]
fn contains_from_a_file() {
    let s93 = stdout(&run(&["gen", "--family", "s", "--params", "n=9,h=3"]));
    let file = tempfile::NamedTempFile::new().unwrap();
    std::fs::write(file.path(), &s93).unwrap();
    let o = run(&["contains", "--forest", "4,4", "--input", file.path().to_str().unwrap()]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o).trim(), "no");

    let o = run_with_stdin(&["contains", "--forest", "2,2"], "Ch\n");
    assert_eq!(oriented(stdout(&o).trim()), "yes 0-1 2-3");
}

#[test]
fn sweep_even_json() {
    let o = run(&["sweep", "--theorem", "even", "--forest", "2,2", "--n", "6", "--format", "json"]);
    assert_eq!(code(&o), 0);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["schema_version"], 1);
    assert_eq!(v["counts"]["checked"], 112);
    assert_eq!(v["counts"]["contains"], 111);
    assert_eq!(v["counts"]["violations"], 0);
    assert_eq!(v["counts"]["exceptions"]["S"], 1);
    assert!(v.get("wall_time_ms").is_none());
}

#[test]
fn text_and_json_counts_agree() {
    let args = ["sweep", "--theorem", "one-odd", "--forest", "3,2", "--range", "5..7"];
    let text = stdout(&run(&args));
    let json: Value = serde_json::from_str(&stdout(&run(&[&args[..], &["--format", "json"]].concat()))).unwrap();
    let c = &json["counts"];
    let line = format!(
        "checked {}  contains {}  exceptions {}  violations {}  anomalies {}",
        c["checked"],
        c["contains"],
        c["exceptions"].as_object().unwrap().values().map(|v| v.as_u64().unwrap()).sum::<u64>(),
        c["violations"],
        c["below_threshold_anomalies"]
    );
    assert!(text.contains(&line), "{line}\n{text}");
}

#[test]
fn reports_are_reproducible_without_timings() {
    let args = ["lemma", "--id", "DIRAC", "--range", "4-6", "--format", "json"];
    assert_eq!(stdout(&run(&args)), stdout(&run(&args)));
    let timed: Value = serde_json::from_str(&stdout(&run(&[&args[..], &["--timings"]].concat()))).unwrap();
    assert!(timed["wall_time_ms"].is_u64());
}

#[test]
fn classify_sets_exit_status() {
    let o = run(&["classify", "--forest", "2,2", "--graph", "EFz_", "--format", "json"]);
    assert_eq!(code(&o), 0);
    let v = &json_lines(&o)[0];
    assert_eq!(v["theorem"], "EVEN");
    assert!(v["verdict"].is_string());

    // A lemma counterexample makes the lemma check exit 1.
    let o = run_with_stdin(&["lemma", "--id", "NBHD_EQ", "--input", "-"], "E`NG\n");
    assert_eq!(code(&o), 1, "{}", stdout(&o));
}

#[test]
fn recognize_and_enumerate() {
    let bowtie = stdout(&run(&["gen", "--family", "l", "--params", "t=2,h=2"]));
    let o = run(&["recognize", "--family", "l", "--h", "2", "--graph", bowtie.trim()]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("\tmatch L"), "{}", stdout(&o));
    let o = run(&["recognize", "--family", "l", "--h", "2", "--graph", "C~"]);
    assert!(stdout(&o).ends_with("\tno match\n"), "{}", stdout(&o));
    let o = run(&["enumerate", "--n", "4", "--connectivity", "connected", "--count"]);
    assert_eq!(stdout(&o).trim(), "6");
    let o = run(&["enumerate", "--n", "4", "--min-degree", "2", "--connectivity", "connected"]);
    assert_eq!(stdout(&o).lines().count(), 3);
}

#[test]
fn turan_and_sharpness() {
    let o = run(&["turan", "--forest", "2,2", "--n", "5", "--format", "json"]);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["all"]["max_edges"], 4);
    let o = run(&["sharpness", "--format", "json"]);
    assert_eq!(code(&o), 0);
    let reports = json_lines(&o);
    assert_eq!(reports.len(), 4);
    assert!(reports.iter().all(|r| r["certified"] == true));
}

#[test]
fn usage_errors_exit_2() {
    for args in [
        &["bogus"][..],
        &["sweep", "--theorem", "even", "--n", "6"],
        &["sweep", "--theorem", "even", "--forest", "2,2"],
        &["sweep", "--theorem", "eg-bound", "--forest", "2,2", "--n", "4"],
        &["sweep", "--theorem", "even", "--forest", "3,2", "--n", "6"],
        &["contains", "--forest", "1,4", "--graph", "C~"],
        &["gen", "--family", "nope"],
        &["gen", "--family", "s", "--params", "n=3,h=4"],
        &["lemma", "--id", "NOPE", "--n", "5"],
        &["enumerate", "--n", "12"],
        &["sweep", "--theorem", "even", "--forest", "2,2", "--range", "7..5"],
    ] {
        let o = run(args);
        assert_eq!(code(&o), 2, "{args:?}: {}", String::from_utf8_lossy(&o.stderr));
    }
}

#[test]
fn malformed_lines_are_skipped_and_flagged() {
    let o = run_with_stdin(&["contains", "--forest", "2,2"], "Ch\nC\n@\n");
    assert_eq!(code(&o), 2);
    let lines: Vec<String> = stdout(&o).lines().map(oriented).collect();
    assert_eq!(lines, ["yes 0-1 2-3", "no"]);
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 2"));
}

#[test]
fn out_flag_writes_a_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("out.g6");
    let o = run(&["enumerate", "--n", "3", "--out", path.to_str().unwrap()]);
    assert_eq!(code(&o), 0);
    assert!(o.stdout.is_empty());
    let body = std::fs::read_to_string(&path).unwrap();
    assert_eq!(body.lines().count(), 4);
}
