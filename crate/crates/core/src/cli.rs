//! Command-line front end: `generate`, `verify`, `search`, `survey`, `ndsg`.
//!
//! Exit codes: 0 on success or a valid labeling, 1 when a labeling is
//! invalid or a search finds nothing, 2 on usage or input errors. Payloads
//! go to stdout (JSON, or DOT with `--emit dot`); diagnostics go to stderr.

use std::io::{Read, Write};
use std::path::PathBuf;
use std::time::Duration;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::constructions::{fixture, FamilyKind, FixtureId};
use crate::error::{Error, Result};
use crate::graph::{GraphDocument, VertexLabeling};
use crate::ndsg::{gmn_document, NdsgParams};
use crate::search::{solve, Catalog, Goal, SearchConfig, SearchStatus};
use crate::verify::{verify, LabelingMode};

pub const EXIT_OK: i32 = 0;
pub const EXIT_NEGATIVE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "graceful",
    about = "Graceful and additively graceful labelings of signed graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Emit a labeled construction or a catalogued figure graph.
    Generate(GenerateArgs),
    /// Check the labeling attached to a graph document.
    Verify(VerifyArgs),
    /// Search for labelings of a graph document.
    Search(SearchArgs),
    /// Survey non-divisible sum graphs for additively graceful labelings.
    Survey(SurveyArgs),
    /// Emit the non-divisible sum graph G(m, n).
    Ndsg(NdsgArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Emit {
    Json,
    Dot,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ModeArg {
    Graceful,
    Additive,
    GracefulSigned,
    AdditiveSigned,
}

impl From<ModeArg> for LabelingMode {
    fn from(m: ModeArg) -> Self {
        match m {
            ModeArg::Graceful => LabelingMode::Graceful,
            ModeArg::Additive => LabelingMode::AdditivelyGraceful,
            ModeArg::GracefulSigned => LabelingMode::GracefulSigned,
            ModeArg::AdditiveSigned => LabelingMode::AdditivelyGracefulSigned,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FamilyArg {
    P3,
    Star,
    Bistar,
    St,
    Ste,
    K4,
}

impl From<FamilyArg> for FamilyKind {
    fn from(f: FamilyArg) -> Self {
        match f {
            FamilyArg::P3 => FamilyKind::P3Pendants,
            FamilyArg::Star => FamilyKind::StarOneNeg,
            FamilyArg::Bistar => FamilyKind::Bistar,
            FamilyArg::St => FamilyKind::St,
            FamilyArg::Ste => FamilyKind::Ste,
            FamilyArg::K4 => FamilyKind::K4Pendants,
        }
    }
}

#[derive(Debug, Args)]
struct GenerateArgs {
    #[arg(
        long,
        requires = "m",
        conflicts_with = "fixture",
        required_unless_present = "fixture"
    )]
    family: Option<FamilyArg>,
    #[arg(long)]
    m: Option<usize>,
    /// Figure id, e.g. fig6a or fig10-g64.
    #[arg(long, value_parser = parse_fixture)]
    fixture: Option<FixtureId>,
    #[arg(long, value_enum, default_value = "json")]
    emit: Emit,
}

#[derive(Debug, Args)]
struct VerifyArgs {
    #[arg(long, value_enum)]
    mode: ModeArg,
    /// Graph document with a `labeling`; `-` reads stdin.
    #[arg(long)]
    input: String,
}

#[derive(Debug, Args)]
struct SearchArgs {
    #[arg(long, value_enum)]
    mode: ModeArg,
    /// Graph document; `-` reads stdin. Any attached labeling is ignored.
    #[arg(long)]
    input: String,
    /// Enumerate every labeling instead of stopping at the first.
    #[arg(long, conflicts_with = "count")]
    all: bool,
    /// Count labelings without listing them.
    #[arg(long)]
    count: bool,
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    node_budget: Option<u64>,
    /// Wall-clock limit in milliseconds; makes results timing dependent.
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    time_budget_ms: Option<u64>,
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    workers: Option<u64>,
}

#[derive(Debug, Args)]
struct SurveyArgs {
    /// Divisors: `2..12` (inclusive), `6`, or a comma list of either.
    #[arg(long, value_parser = parse_values)]
    m: Values,
    /// Vertex counts, same syntax as `--m`.
    #[arg(long, value_parser = parse_values)]
    n: Values,
    #[arg(long)]
    catalog: PathBuf,
    /// Recompute pairs already in the catalog (appends new lines).
    #[arg(long)]
    force: bool,
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..), default_value_t = 10_000_000)]
    node_budget: u64,
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    workers: Option<u64>,
}

#[derive(Debug, Args)]
struct NdsgArgs {
    #[arg(long)]
    m: u64,
    #[arg(long)]
    n: u64,
    #[arg(long, value_enum, default_value = "json")]
    emit: Emit,
}

#[derive(Debug, Clone, PartialEq, Eq)]
struct Values(Vec<u64>);

fn parse_fixture(s: &str) -> std::result::Result<FixtureId, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

/// Parses `a..b` (inclusive), `a`, or comma-separated combinations.
fn parse_values(s: &str) -> std::result::Result<Values, String> {
    let mut out = Vec::new();
    for part in s.split(',') {
        let part = part.trim();
        let num = |t: &str| {
            t.trim()
                .parse::<u64>()
                .map_err(|_| format!("invalid number {t:?}"))
        };
        match part.split_once("..") {
            Some((lo, hi)) => {
                let (lo, hi) = (num(lo)?, num(hi.trim_start_matches('='))?);
                if lo > hi {
                    return Err(format!("empty range {part}"));
                }
                out.extend(lo..=hi);
            }
            None => out.push(num(part)?),
        }
    }
    Ok(Values(out))
}

fn default_workers() -> usize {
    std::thread::available_parallelism().map_or(1, |n| n.get())
}

fn read_document(input: &str, stdin: &mut dyn Read) -> Result<GraphDocument> {
    let text = if input == "-" {
        let mut buf = String::new();
        stdin.read_to_string(&mut buf)?;
        buf
    } else {
        std::fs::read_to_string(input)?
    };
    GraphDocument::parse(&text)
}

fn emit_json<T: Serialize>(out: &mut dyn Write, value: &T) -> Result<()> {
    writeln!(out, "{}", serde_json::to_string(value)?)?;
    Ok(())
}

#[derive(Serialize)]
struct SearchReport<'a> {
    mode: LabelingMode,
    status: SearchStatus,
    nodes_explored: u64,
    witness_count: u64,
    witnesses: &'a [VertexLabeling],
}

fn dispatch(command: Command, stdin: &mut dyn Read, out: &mut dyn Write) -> Result<i32> {
    match command {
        Command::Generate(args) => {
            let built = match (args.fixture, args.family) {
                (Some(id), _) => fixture(id)?,
                (None, Some(family)) => {
                    FamilyKind::from(family).build(args.m.expect("clap requires --m"))?
                }
                (None, None) => unreachable!("clap requires --family or --fixture"),
            };
            match args.emit {
                Emit::Json => writeln!(out, "{}", built.document().to_json()?)?,
                Emit::Dot => write!(out, "{}", built.graph.to_dot(Some(&built.labeling)))?,
            }
            Ok(EXIT_OK)
        }
        Command::Verify(args) => {
            let doc = read_document(&args.input, stdin)?;
            let graph = doc.graph()?;
            let labeling = doc.labeling.ok_or_else(|| {
                Error::InvalidParameter("input document has no \"labeling\" to verify".into())
            })?;
            let report = verify(&graph, &labeling, args.mode.into())?;
            emit_json(out, &report)?;
            Ok(if report.valid { EXIT_OK } else { EXIT_NEGATIVE })
        }
        Command::Search(args) => {
            let graph = read_document(&args.input, stdin)?.graph()?;
            let goal = if args.all {
                Goal::EnumerateAll
            } else if args.count {
                Goal::CountOnly
            } else {
                Goal::FindOne
            };
            let mut config = SearchConfig::new(args.mode.into(), goal)
                .with_workers(args.workers.map_or_else(default_workers, |w| w as usize));
            config.node_budget = args.node_budget;
            config.time_budget = args.time_budget_ms.map(Duration::from_millis);
            let outcome = solve(&graph, &config)?;
            emit_json(
                out,
                &SearchReport {
                    mode: config.mode,
                    status: outcome.status,
                    nodes_explored: outcome.nodes_explored,
                    witness_count: outcome.witness_count,
                    witnesses: &outcome.witnesses,
                },
            )?;
            let ok = match (goal, outcome.status) {
                (_, SearchStatus::Found) => true,
                (Goal::FindOne, _) => false,
                (_, SearchStatus::ExhaustedNone) => true,
                (_, SearchStatus::BudgetExceeded) => false,
            };
            Ok(if ok { EXIT_OK } else { EXIT_NEGATIVE })
        }
        Command::Survey(args) => {
            let config = SearchConfig::new(LabelingMode::AdditivelyGraceful, Goal::FindOne)
                .with_node_budget(args.node_budget)
                .with_workers(args.workers.map_or_else(default_workers, |w| w as usize));
            let mut catalog = Catalog::open(&args.catalog)?;
            for record in catalog.survey(&args.m.0, &args.n.0, &config, args.force)? {
                emit_json(out, &record)?;
            }
            Ok(EXIT_OK)
        }
        Command::Ndsg(args) => {
            let params = NdsgParams::new(args.m, args.n)?;
            let doc = gmn_document(params)?;
            match args.emit {
                Emit::Json => writeln!(out, "{}", doc.to_json()?)?,
                Emit::Dot => write!(out, "{}", doc.graph()?.to_dot(None))?,
            }
            Ok(EXIT_OK)
        }
    }
}

/// Runs the CLI on `argv` (including the program name) and returns the exit
/// code.
pub fn run<I, T>(argv: I, stdin: &mut dyn Read, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let rendered = e.render().to_string();
            if e.use_stderr() {
                let _ = write!(err, "{rendered}");
            } else {
                let _ = write!(out, "{rendered}");
            }
            return code;
        }
    };
    match dispatch(cli.command, stdin, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    }
}
