//! Command-line front end. Each subcommand is a thin adapter over the
//! library; [`run`] returns the process exit code.
//!
//! Exit codes: 0 success, 1 verification failures, 2 input error,
//! 3 disconnected graph, 4 search budget exceeded.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use crate::alpha::AlphaArray;
use crate::error::Error;
use crate::graph::{parse_edge_list, Graph};
use crate::majorization::{self, lorenz_points, render_svg, Comparison, NamedCurve};
use crate::property::Property;
use crate::rational::Rational;
use crate::realize::{is_realizable, RealizabilityStatus};
use crate::stats::{self, StatsReport};
use crate::verify::run_campaign;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURES: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_DISCONNECTED: i32 = 3;
pub const EXIT_BUDGET: i32 = 4;

#[derive(Debug, Parser)]
#[command(
    name = "netdist",
    version,
    about = "Distance frequency analysis of undirected networks"
)]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, global = true, default_value_t = Format::Text)]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum CurveFormat {
    Csv,
    Svg,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Distance statistics of a graph (or of a bare alpha array).
    Analyze(InputArgs),
    /// Majorization verdict between two arrays.
    Compare(CompareArgs),
    /// Extended Lorenz curve as CSV or SVG.
    Lorenz(LorenzArgs),
    /// Randomized check of the majorization properties.
    Verify(VerifyArgs),
    /// Search for a graph with the given alpha array.
    Realize(RealizeArgs),
    /// Chain and complete-graph statistics for N nodes.
    Baseline(BaselineArgs),
}

#[derive(Debug, Args)]
pub struct InputArgs {
    /// Edge-list file.
    pub path: Option<PathBuf>,
    /// Comma-separated alpha array, N inferred as length + 1.
    #[arg(long, conflicts_with = "path")]
    pub alpha: Option<String>,
}

#[derive(Debug, Args)]
pub struct CompareArgs {
    /// Two edge-list files.
    #[arg(num_args = 0..=2)]
    pub paths: Vec<PathBuf>,
    /// Two comma-separated alpha arrays (give the flag twice).
    #[arg(long)]
    pub alpha: Vec<String>,
}

#[derive(Debug, Args)]
pub struct LorenzArgs {
    #[command(flatten)]
    pub input: InputArgs,
    #[arg(long, value_enum, default_value_t = CurveFormat::Csv)]
    pub out: CurveFormat,
    /// Also emit the complete-graph and chain curves for the same N.
    #[arg(long)]
    pub with_baselines: bool,
    /// Destination file; stdout when absent.
    #[arg(long, short)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long, default_value_t = 2)]
    pub n_min: usize,
    #[arg(long, default_value_t = 40)]
    pub n_max: usize,
    #[arg(long, default_value_t = 1000)]
    pub trials: usize,
    #[arg(long, default_value_t = 7)]
    pub seed: u64,
    /// Write elapsed_ms as 0 so repeated runs are byte-identical.
    #[arg(long)]
    pub omit_elapsed: bool,
}

#[derive(Debug, Args)]
pub struct RealizeArgs {
    #[arg(long)]
    pub alpha: String,
    /// Maximum number of edge subsets to examine.
    #[arg(long)]
    pub budget: Option<u64>,
    /// Write the witness edge list to this file.
    #[arg(long)]
    pub witness: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct BaselineArgs {
    #[arg(long)]
    pub n: usize,
}

struct Failure {
    code: i32,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Disconnected => EXIT_DISCONNECTED,
            _ => EXIT_INPUT,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

fn usage(message: impl Into<String>) -> Failure {
    Failure {
        code: EXIT_INPUT,
        message: message.into(),
    }
}

/// Parses `args` (including the program name) and runs the subcommand.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            if e.use_stderr() {
                let _ = write!(err, "{e}");
                return EXIT_INPUT;
            }
            let _ = write!(out, "{e}");
            return EXIT_OK;
        }
    };
    let format = cli.format;
    let result = match cli.command {
        Command::Analyze(a) => analyze(&a, format),
        Command::Compare(a) => compare(&a, format),
        Command::Lorenz(a) => lorenz(&a),
        Command::Verify(a) => verify(&a, format),
        Command::Realize(a) => realize(&a, format),
        Command::Baseline(a) => baseline(&a, format),
    };
    match result {
        Ok((text, code)) => {
            let _ = out.write_all(text.as_bytes());
            code
        }
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}

type Outcome = Result<(String, i32), Failure>;

fn read_graph(path: &Path) -> Result<Graph, Failure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| usage(format!("cannot read {}: {e}", path.display())))?;
    parse_edge_list(&text).map_err(|e| usage(format!("{}: {e}", path.display())))
}

fn graph_alpha(path: &Path) -> Result<(Graph, AlphaArray), Failure> {
    let g = read_graph(path)?;
    if !g.is_connected() {
        return Err(Failure {
            code: EXIT_DISCONNECTED,
            message: format!("{}: graph is not connected", path.display()),
        });
    }
    let a = g.alpha_array()?;
    Ok((g, a))
}

fn input_alpha(input: &InputArgs) -> Result<(Option<Graph>, AlphaArray), Failure> {
    match (&input.path, &input.alpha) {
        (Some(path), None) => graph_alpha(path).map(|(g, a)| (Some(g), a)),
        (None, Some(text)) => Ok((None, text.parse()?)),
        (Some(_), Some(_)) => Err(usage("give either a path or --alpha, not both")),
        (None, None) => Err(usage("missing input: give an edge-list path or --alpha")),
    }
}

fn exact(r: &Rational) -> String {
    format!("{r} ({})", r.to_decimal(6))
}

fn list(values: &[u64]) -> String {
    values
        .iter()
        .map(u64::to_string)
        .collect::<Vec<_>>()
        .join(",")
}

#[derive(Serialize)]
struct AnalyzeJson<'a> {
    #[serde(skip_serializing_if = "Option::is_none")]
    edges: Option<usize>,
    #[serde(flatten)]
    report: &'a StatsReport,
    checks: BTreeMap<&'static str, bool>,
}

fn analyze(args: &InputArgs, format: Format) -> Outcome {
    let (graph, alpha) = input_alpha(args)?;
    let report = StatsReport::from_alpha(&alpha)?;
    let mut checks: BTreeMap<&'static str, bool> = Property::ALPHA_BASICS
        .iter()
        .map(|p| (p.id(), !report.violations.contains(p)))
        .collect();
    checks.insert(Property::BetaBound.id(), report.beta_holds);

    let text = match format {
        Format::Json => {
            let doc = AnalyzeJson {
                edges: graph.as_ref().map(Graph::edge_count),
                report: &report,
                checks,
            };
            serde_json::to_string_pretty(&doc).expect("serializes") + "\n"
        }
        Format::Text => {
            let mut s = String::new();
            let _ = writeln!(s, "nodes: {}", report.n);
            if let Some(g) = &graph {
                let _ = writeln!(s, "edges: {}", g.edge_count());
            }
            let _ = writeln!(s, "alpha: {}", report.alpha);
            let _ = writeln!(s, "average: {}", exact(&report.average));
            let _ = writeln!(s, "median: {}", exact(&report.median));
            let _ = writeln!(s, "gini: {}", exact(&report.gini));
            let _ = writeln!(s, "beta: {}", list(&report.beta));
            for (id, ok) in &checks {
                let _ = writeln!(s, "{id}: {}", if *ok { "pass" } else { "FAIL" });
            }
            s
        }
    };
    Ok((text, EXIT_OK))
}

fn compare(args: &CompareArgs, format: Format) -> Outcome {
    let (a, b) = match (args.paths.len(), args.alpha.len()) {
        (2, 0) => (
            graph_alpha(&args.paths[0])?.1,
            graph_alpha(&args.paths[1])?.1,
        ),
        (0, 2) => (args.alpha[0].parse()?, args.alpha[1].parse::<AlphaArray>()?),
        _ => {
            return Err(usage(
                "compare needs two edge-list paths or --alpha given twice",
            ))
        }
    };
    if a.n() != b.n() {
        return Err(usage(format!(
            "node counts differ: A has {} nodes, B has {}",
            a.n(),
            b.n()
        )));
    }
    let verdict = majorization::compare(a.counts(), b.counts())?;
    let (label, detail) = match verdict {
        Comparison::Both => ("both", String::new()),
        Comparison::LeftMajorizes { right_fails_at } => (
            "A majorizes B",
            format!("B does not majorize A: first violating prefix {right_fails_at}\n"),
        ),
        Comparison::RightMajorizes { left_fails_at } => (
            "B majorizes A",
            format!("A does not majorize B: first violating prefix {left_fails_at}\n"),
        ),
        Comparison::Incomparable {
            left_fails_at,
            right_fails_at,
            totals_equal,
        } => {
            let mut d = String::new();
            if !totals_equal {
                d.push_str("totals differ\n");
            }
            if let Some(i) = left_fails_at {
                let _ = writeln!(d, "A does not majorize B: first violating prefix {i}");
            }
            if let Some(i) = right_fails_at {
                let _ = writeln!(d, "B does not majorize A: first violating prefix {i}");
            }
            ("incomparable", d)
        }
    };
    let text = match format {
        Format::Json => {
            let doc = json!({
                "a": a.to_string(),
                "b": b.to_string(),
                "result": label,
                "detail": verdict,
            });
            serde_json::to_string_pretty(&doc).expect("serializes") + "\n"
        }
        Format::Text => format!("A: {a}\nB: {b}\n{label}\n{detail}"),
    };
    Ok((text, EXIT_OK))
}

fn lorenz(args: &LorenzArgs) -> Outcome {
    let (_, alpha) = input_alpha(&args.input)?;
    let n = alpha.n();
    let main = lorenz_points(alpha.counts())?;
    let mut curves = vec![("input", main)];
    if args.with_baselines {
        curves.push((
            "complete",
            lorenz_points(stats::complete_alpha(n)?.counts())?,
        ));
        curves.push(("chain", lorenz_points(stats::chain_alpha(n)?.counts())?));
    }
    let body = match args.out {
        CurveFormat::Csv if curves.len() == 1 => curves[0].1.to_csv(),
        CurveFormat::Csv => {
            let mut s = String::from("curve,x,y\n");
            for (label, curve) in &curves {
                for p in curve.points() {
                    let _ = writeln!(s, "{label},{},{}", p.x.to_decimal(9), p.y.to_decimal(9));
                }
            }
            s
        }
        CurveFormat::Svg => {
            let named: Vec<NamedCurve<'_>> = curves
                .iter()
                .map(|(label, curve)| NamedCurve { label, curve })
                .collect();
            render_svg(&named)
        }
    };
    match &args.output {
        Some(path) => {
            std::fs::write(path, &body)
                .map_err(|e| usage(format!("cannot write {}: {e}", path.display())))?;
            Ok((String::new(), EXIT_OK))
        }
        None => Ok((body, EXIT_OK)),
    }
}

fn verify(args: &VerifyArgs, format: Format) -> Outcome {
    let report = run_campaign(args.n_min, args.n_max, args.trials, args.seed)?;
    let code = if report.passed() {
        EXIT_OK
    } else {
        EXIT_FAILURES
    };
    let text = match format {
        Format::Json => report.to_json(!args.omit_elapsed) + "\n",
        Format::Text => {
            let mut s = format!(
                "trials: {}\npairs checked: {} ({} comparable)\nfailures: {}\n",
                report.trials,
                report.pairs_checked,
                report.comparable_pairs,
                report.failures.len()
            );
            for f in &report.failures {
                let _ = writeln!(
                    s,
                    "  trial {} seed {} n={} alpha={} {}",
                    f.trial, f.seed, f.n, f.alpha, f.property
                );
            }
            if !args.omit_elapsed {
                let _ = writeln!(s, "elapsed: {} ms", report.elapsed.as_millis());
            }
            s
        }
    };
    Ok((text, code))
}

fn realize(args: &RealizeArgs, format: Format) -> Outcome {
    let alpha: AlphaArray = args.alpha.parse()?;
    let result = is_realizable(&alpha, args.budget)?;
    let witness_text = result.witness.as_ref().map(Graph::to_edge_list);
    if let (Some(path), Some(text)) = (&args.witness, &witness_text) {
        std::fs::write(path, text)
            .map_err(|e| usage(format!("cannot write {}: {e}", path.display())))?;
    }
    let code = match result.status {
        RealizabilityStatus::Aborted => EXIT_BUDGET,
        _ => EXIT_OK,
    };
    let status = match result.status {
        RealizabilityStatus::Realizable => "realizable",
        RealizabilityStatus::NotRealizable => "not_realizable",
        RealizabilityStatus::Aborted => "aborted",
    };
    let text = match format {
        Format::Json => {
            let doc = json!({
                "alpha": alpha.to_string(),
                "status": result.status,
                "candidates_examined": result.candidates_examined,
                "rejected_by": result.rejected_by,
                "witness": result.witness.as_ref().map(|g| g.edges().to_vec()),
            });
            serde_json::to_string_pretty(&doc).expect("serializes") + "\n"
        }
        Format::Text => {
            let mut s = format!("alpha: {alpha}\nstatus: {status}\n");
            let _ = writeln!(s, "candidates examined: {}", result.candidates_examined);
            if !result.rejected_by.is_empty() {
                let ids: Vec<&str> = result.rejected_by.iter().map(|p| p.id()).collect();
                let _ = writeln!(s, "rejected by: {}", ids.join(", "));
            }
            if let Some(w) = &witness_text {
                match &args.witness {
                    Some(path) => {
                        let _ = writeln!(s, "witness written to {}", path.display());
                    }
                    None => {
                        s.push_str("witness:\n");
                        s.push_str(w);
                    }
                }
            }
            s
        }
    };
    Ok((text, code))
}

fn baseline(args: &BaselineArgs, format: Format) -> Outcome {
    let n = args.n;
    let chain = stats::chain_alpha(n)?;
    let complete = stats::complete_alpha(n)?;
    let chain_report = StatsReport::from_alpha(&chain)?;
    let complete_report = StatsReport::from_alpha(&complete)?;
    let (lower, upper) = stats::chain_median_bracket(n)?;
    let closed_form_average = stats::chain_average(n)?;
    let asymptotic = stats::chain_median_asymptotic(n)?;
    let relation = match chain_report.median.cmp(&chain_report.average) {
        std::cmp::Ordering::Less => "median < average",
        std::cmp::Ordering::Equal => "median = average",
        std::cmp::Ordering::Greater => "median > average",
    };
    let text = match format {
        Format::Json => {
            let doc = json!({
                "n": n,
                "chain": chain_report,
                "chain_average_closed_form": closed_form_average,
                "chain_median_bracket": [lower, upper],
                "chain_median_asymptotic": asymptotic.to_decimal(9),
                "chain_median_vs_average": relation,
                "complete": complete_report,
            });
            serde_json::to_string_pretty(&doc).expect("serializes") + "\n"
        }
        Format::Text => {
            let mut s = format!("nodes: {n}\n");
            let _ = writeln!(s, "chain alpha: {chain}");
            let _ = writeln!(s, "chain average: {}", exact(&chain_report.average));
            let _ = writeln!(s, "chain average (N+1)/3: {}", exact(&closed_form_average));
            let _ = writeln!(s, "chain median: {}", exact(&chain_report.median));
            let _ = writeln!(s, "chain median closed-form bracket: {{{lower}, {upper}}}");
            let _ = writeln!(
                s,
                "chain median N(1-sqrt(2)/2): {}",
                asymptotic.to_decimal(6)
            );
            let _ = writeln!(s, "chain {relation}");
            let _ = writeln!(s, "chain gini: {}", exact(&chain_report.gini));
            let _ = writeln!(s, "complete alpha: {complete}");
            let _ = writeln!(s, "complete average: {}", exact(&complete_report.average));
            let _ = writeln!(s, "complete median: {}", exact(&complete_report.median));
            let _ = writeln!(s, "complete gini: {}", exact(&complete_report.gini));
            s
        }
    };
    Ok((text, EXIT_OK))
}
