//! `linforest`: command-line front end.
//!
//! Exit status: 0 clean, 1 when a sweep, lemma check or classification finds
//! a violation (or a sharpness construction fails to certify), 2 on usage or
//! input errors.

mod commands;

use std::ops::RangeInclusive;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(
    name = "linforest",
    version,
    about = "Linear-forest embedding and exhaustive verification of minimum-degree stability results"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Generate a member of an exceptional family as graph6.
    Gen {
        /// Family name: s, splus, l, lgen, fglue, tglue, u3, h1, h2, k2match, k3match, hnla.
        #[arg(long)]
        family: String,
        /// Comma-separated parameters, e.g. `n=7,h=2`.
        #[arg(long, default_value = "")]
        params: String,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Decide membership of each input graph in a family.
    Recognize {
        #[arg(long)]
        family: String,
        /// Degree parameter (`a` for hnla); ignored by h1, h2, k2match, k3match.
        #[arg(long, default_value_t = 0)]
        h: usize,
        #[command(flatten)]
        input: GraphInput,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Decide whether each input graph contains the linear forest.
    Contains {
        #[command(flatten)]
        forest: ForestArg,
        #[command(flatten)]
        input: GraphInput,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Classify each input graph under the theorem matching the forest.
    Classify {
        #[command(flatten)]
        forest: ForestArg,
        /// Force a theorem instead of choosing by the graph's connectivity.
        #[arg(long)]
        theorem: Option<String>,
        #[command(flatten)]
        input: GraphInput,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Sweep a theorem (or the edge bound for paths) over many graphs.
    Sweep {
        /// even, one-odd, two-odd-2conn, two-odd-cut or eg-bound.
        #[arg(long)]
        theorem: String,
        /// Required except for eg-bound.
        #[arg(long)]
        forest: Option<String>,
        #[command(flatten)]
        run: RunArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Check a lemma on every instance in an order range.
    Lemma {
        /// Lemma id, e.g. DIRAC or small-p5p3; `--list` prints all ids.
        #[arg(long, required_unless_present = "list")]
        id: Option<String>,
        #[arg(long)]
        list: bool,
        #[command(flatten)]
        run: RunArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Exact maximum edge count of F-free graphs of one order.
    Turan {
        #[command(flatten)]
        forest: ForestArg,
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Run the sharpness constructions (all of them without --case).
    Sharpness {
        #[arg(long)]
        case: Option<String>,
        /// Path-length parameter `a` or `b` for the parametrized cases.
        #[arg(long)]
        size: Option<usize>,
        /// Scale factor; the order is h(h-1)q + 1.
        #[arg(long)]
        q: Option<usize>,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// List every graph of order n up to isomorphism as graph6.
    Enumerate {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        min_degree: usize,
        /// any, connected, two-connected or has-cut-vertex.
        #[arg(long, default_value = "any")]
        connectivity: String,
        /// Print only the number of graphs.
        #[arg(long)]
        count: bool,
        #[command(flatten)]
        output: OutputArgs,
    },
}

#[derive(Args, Debug)]
struct ForestArg {
    /// Path orders, e.g. `5,3` for P5 ∪ P3.
    #[arg(long)]
    forest: String,
}

#[derive(Args, Debug)]
struct GraphInput {
    /// graph6 file, one graph per line; `-` reads standard input.
    #[arg(long, default_value = "-", conflicts_with = "graph")]
    input: PathBuf,
    /// graph6 string given inline (repeatable).
    #[arg(long)]
    graph: Vec<String>,
}

#[derive(Args, Debug)]
struct RunArgs {
    /// Single order.
    #[arg(long, conflicts_with = "range")]
    n: Option<usize>,
    /// Order range `lo..hi` (inclusive; `lo..=hi` and `lo-hi` also accepted).
    #[arg(long, value_parser = parse_range)]
    range: Option<RangeInclusive<usize>>,
    /// Read graphs from a graph6 file (`-` for stdin) instead of enumerating.
    #[arg(long)]
    input: Option<PathBuf>,
    /// Drop isomorphic duplicates from --input.
    #[arg(long, requires = "input")]
    dedup: bool,
    /// Worker threads; 0 uses every core.
    #[arg(long, env = "LINFOREST_JOBS", default_value_t = 0)]
    jobs: usize,
    /// Record wall time in the report.
    #[arg(long)]
    timings: bool,
}

#[derive(Args, Debug)]
struct OutputArgs {
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Write to this file instead of standard output.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

fn parse_range(s: &str) -> Result<RangeInclusive<usize>, String> {
    let (lo, hi) = s
        .split_once("..=")
        .or_else(|| s.split_once(".."))
        .or_else(|| s.split_once('-'))
        .ok_or_else(|| format!("expected lo..hi, got {s:?}"))?;
    let num = |t: &str| t.trim().parse::<usize>().map_err(|_| format!("bad order {t:?} in range {s:?}"));
    let (lo, hi) = (num(lo)?, num(hi)?);
    if lo > hi {
        return Err(format!("empty range {s:?}"));
    }
    Ok(lo..=hi)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("linforest: {e}");
            ExitCode::from(2)
        }
    }
}
