use std::fmt;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use hammock_core::{HammockDims, HammockVariant, Mode};

mod commands;
mod source;

#[derive(Parser, Debug)]
#[command(
    name = "hammock",
    version,
    about = "Reliability polynomials of hammock networks"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Exact coefficients N_k of a hammock or of a graph file.
    Exact(ExactArgs),
    /// Cubic spline approximation of a hammock and its dual.
    Approximate(ApproximateArgs),
    /// Lower and upper coefficient bounds.
    Bounds(BoundsArgs),
    /// Per-k table and grid error of the approximation against the exact polynomial.
    Compare(CompareArgs),
    /// Uniform error bound of the approximation.
    ErrorBound(ErrorBoundArgs),
    /// Plot-ready curves sampled on a grid of p.
    Curves(CurvesArgs),
}

#[derive(Args, Debug, Clone, Copy)]
struct DimsArgs {
    /// Devices along each path (length).
    #[arg(long)]
    l: usize,
    /// Parallel paths (width).
    #[arg(long)]
    w: usize,
}

impl DimsArgs {
    fn dims(&self) -> Result<HammockDims, Failure> {
        Ok(HammockDims::new(self.l, self.w)?)
    }
}

#[derive(Args, Debug, Clone)]
struct SourceArgs {
    /// Exact coefficient JSON to use instead of enumeration.
    #[arg(long)]
    exact_file: Option<PathBuf>,
    /// Directory holding `hammock_l{l}_w{w}.json` exact fixtures.
    #[arg(long, env = "HAMMOCK_FIXTURE_DIR")]
    fixture_dir: Option<PathBuf>,
    /// Junction layout of the generated hammock.
    #[arg(long, value_enum, default_value_t = Variant::BrickA)]
    variant: Variant,
}

#[derive(Args, Debug, Clone, Copy)]
struct SplineArgs {
    /// Offset of the second dual anchor, N'_{w+s}.
    #[arg(long, default_value_t = 1)]
    s: usize,
    /// Offset of the second primal anchor, N_{l+t}.
    #[arg(long, default_value_t = 1)]
    t: usize,
    #[arg(long, value_enum, default_value_t = ModeArg::Unique)]
    mode: ModeArg,
    /// First bridge point (general mode).
    #[arg(long, required_if_eq("mode", "general"))]
    x1: Option<usize>,
    /// Second bridge point (general mode).
    #[arg(long, required_if_eq("mode", "general"))]
    x2: Option<usize>,
}

impl SplineArgs {
    fn mode(&self) -> Mode {
        match (self.mode, self.x1, self.x2) {
            (ModeArg::General, Some(x1), Some(x2)) => Mode::General { x1, x2 },
            _ => Mode::Unique,
        }
    }
}

#[derive(Args, Debug, Clone)]
struct OutputArgs {
    #[arg(long, value_enum)]
    format: Option<Format>,
    /// Write the report here instead of stdout.
    #[arg(long, short)]
    output: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct ExactArgs {
    #[arg(long, requires = "w", conflicts_with = "graph")]
    l: Option<usize>,
    #[arg(long, requires = "l", conflicts_with = "graph")]
    w: Option<usize>,
    /// Two-terminal graph: `vertices source terminal`, then `u v` per edge.
    #[arg(long, required_unless_present = "l")]
    graph: Option<PathBuf>,
    #[command(flatten)]
    source: SourceArgs,
    #[command(flatten)]
    out: OutputArgs,
}

#[derive(Args, Debug)]
struct ApproximateArgs {
    #[command(flatten)]
    dims: DimsArgs,
    #[command(flatten)]
    spline: SplineArgs,
    /// Take the four anchors from the exact coefficients.
    #[arg(long, conflicts_with_all = ["anchors_file", "nl"])]
    auto_anchors: bool,
    /// JSON with `t, s, n_l, n_lt, n_w_dual, n_ws_dual`.
    #[arg(long, conflicts_with = "nl")]
    anchors_file: Option<PathBuf>,
    /// N_l.
    #[arg(long, requires_all = ["nlt", "nw_dual", "nws_dual"])]
    nl: Option<u64>,
    /// N_{l+t}.
    #[arg(long, requires = "nl")]
    nlt: Option<u64>,
    /// N'_w.
    #[arg(long, requires = "nl")]
    nw_dual: Option<u64>,
    /// N'_{w+s}.
    #[arg(long, requires = "nl")]
    nws_dual: Option<u64>,
    #[command(flatten)]
    source: SourceArgs,
    #[command(flatten)]
    out: OutputArgs,
}

#[derive(Args, Debug)]
struct BoundsArgs {
    #[command(flatten)]
    dims: DimsArgs,
    /// N_l.
    #[arg(long, requires_all = ["nl1", "nnw1", "nnw"])]
    nl: Option<u64>,
    /// N_{l+1}.
    #[arg(long, requires = "nl")]
    nl1: Option<u64>,
    /// N_{n-w-1}.
    #[arg(long, requires = "nl")]
    nnw1: Option<u64>,
    /// N_{n-w}.
    #[arg(long, requires = "nl")]
    nnw: Option<u64>,
    #[command(flatten)]
    source: SourceArgs,
    #[command(flatten)]
    out: OutputArgs,
}

#[derive(Args, Debug)]
struct CompareArgs {
    #[command(flatten)]
    dims: DimsArgs,
    #[command(flatten)]
    spline: SplineArgs,
    #[command(flatten)]
    source: SourceArgs,
    /// Number of evenly spaced points of p in [0, 1].
    #[arg(long, default_value_t = 1001, value_parser = clap::value_parser!(u32).range(2..))]
    grid: u32,
    /// Also write the per-p curves as CSV here.
    #[arg(long)]
    curves: Option<PathBuf>,
    #[command(flatten)]
    out: OutputArgs,
}

#[derive(Args, Debug)]
struct ErrorBoundArgs {
    #[command(flatten)]
    dims: DimsArgs,
    #[command(flatten)]
    out: OutputArgs,
}

#[derive(Args, Debug)]
struct CurvesArgs {
    #[command(flatten)]
    dims: DimsArgs,
    #[command(flatten)]
    spline: SplineArgs,
    #[command(flatten)]
    source: SourceArgs,
    #[arg(long, default_value_t = 1001, value_parser = clap::value_parser!(u32).range(2..))]
    grid: u32,
    /// Emit the coefficient points (k, N_k, f(k)) instead of curves in p.
    #[arg(long)]
    points: bool,
    #[command(flatten)]
    out: OutputArgs,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
enum ModeArg {
    Unique,
    General,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
enum Variant {
    BrickA,
    BrickB,
}

impl From<Variant> for HammockVariant {
    fn from(v: Variant) -> Self {
        match v {
            Variant::BrickA => HammockVariant::BrickA,
            Variant::BrickB => HammockVariant::BrickB,
        }
    }
}

/// A failed run: stable code plus one-line message.
#[derive(Debug)]
pub struct Failure {
    code: &'static str,
    message: String,
}

impl Failure {
    pub fn new(code: &'static str, message: impl Into<String>) -> Self {
        Failure {
            code,
            message: message.into(),
        }
    }
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let line = self.message.replace('\n', " ");
        write!(f, "error[{}]: {}", self.code, line)
    }
}

impl From<hammock_core::Error> for Failure {
    fn from(e: hammock_core::Error) -> Self {
        Failure::new(e.code(), e.to_string())
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::new("E_IO", e.to_string())
    }
}

impl From<csv::Error> for Failure {
    fn from(e: csv::Error) -> Self {
        Failure::new("E_IO", e.to_string())
    }
}

impl From<serde_json::Error> for Failure {
    fn from(e: serde_json::Error) -> Self {
        Failure::new("E_JSON", e.to_string())
    }
}

/// Sends a finished report to `--output` or stdout.
fn emit(out: &OutputArgs, body: &str) -> Result<(), Failure> {
    match &out.output {
        Some(path) => std::fs::write(path, body)
            .map_err(|e| Failure::new("E_IO", format!("{}: {e}", path.display()))),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout.write_all(body.as_bytes())?;
            stdout.flush()?;
            Ok(())
        }
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Exact(a) => emit(&a.out, &commands::exact(&a)?),
        Command::Approximate(a) => emit(&a.out, &commands::approximate(&a)?),
        Command::Bounds(a) => emit(&a.out, &commands::bounds(&a)?),
        Command::Compare(a) => commands::compare(&a),
        Command::ErrorBound(a) => emit(&a.out, &commands::error_bound(&a)?),
        Command::Curves(a) => emit(&a.out, &commands::curves(&a)?),
    }
}

/// Collapses a clap error into one line, dropping the usage and help tail.
fn usage_line(e: &clap::Error) -> String {
    let text = e.to_string();
    let head = text.split("\n\n").next().unwrap_or(&text);
    let head = head.trim_start_matches("error:");
    head.split_whitespace().collect::<Vec<_>>().join(" ")
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => e.exit(),
        Err(e) => {
            eprintln!("{}", Failure::new("E_USAGE", usage_line(&e)));
            return ExitCode::from(2);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("{e}");
            ExitCode::FAILURE
        }
    }
}
