//! `gdiv`: classify, divide, colour and re-verify graphs from the command line.
//!
//! Exit statuses: 0 success, 1 verification failure or conjecture
//! counterexample, 2 usage, 3 parse failure, 4 class violation, 5 theorem
//! violation, 6 budget exceeded, 7 I/O failure.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use graph_divisibility::coloring::{audit_csv, BoundKind};
use graph_divisibility::corpus::{
    generate_with, parse_graph_text, CorpusError, CorpusSpec, Filter, Source,
};
use graph_divisibility::exec::Execution;
use graph_divisibility::harness::{
    cmd_classify, cmd_color, cmd_conjecture, cmd_divide, cmd_verify, HarnessError, Mode,
    RunOptions, RunReport, WeightSpec,
};
use graph_divisibility::{Budget, Graph};
use serde_json::json;

const USAGE: u8 = 2;
const PARSE: u8 = 3;
const BUDGET: u8 = 6;
const IO: u8 = 7;

#[derive(Parser)]
#[command(
    name = "gdiv",
    version,
    about = "Constructive divisibility for hereditary graph classes"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Report P5, C5, bull, odd-hole and perfection membership with witnesses.
    Classify(Common),
    /// Divide each graph and verify the division.
    Divide {
        #[command(flatten)]
        common: Common,
        #[arg(long, value_enum)]
        mode: ModeArg,
        /// `unit` or a file of whitespace-separated weights, one line per graph.
        #[arg(long, default_value = "unit")]
        weights: String,
    },
    /// Colour each graph by recursive division and audit the bound.
    Color {
        #[command(flatten)]
        common: Common,
        #[arg(long, value_enum)]
        mode: ModeArg,
    },
    /// Re-check the divisions and colourings stored in a report.
    Verify {
        #[arg(long, value_name = "REPORT")]
        division: PathBuf,
        /// Only check the records of these graphs.
        #[arg(long, value_name = "FILE")]
        graph: Option<PathBuf>,
        #[command(flatten)]
        output: Output,
    },
    /// Search odd-hole-free graphs for one that is not 2-divisible.
    Conjecture {
        #[arg(long, default_value_t = 7)]
        max_n: usize,
        /// Odd-hole-containing samples checked for non-divisibility.
        #[arg(long, default_value_t = 200)]
        spot_checks: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[command(flatten)]
        output: Output,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Two,
    Perfect,
}

impl From<ModeArg> for Mode {
    fn from(m: ModeArg) -> Mode {
        match m {
            ModeArg::Two => Mode::Two,
            ModeArg::Perfect => Mode::Perfect,
        }
    }
}

#[derive(Clone, Copy, ValueEnum, PartialEq, Eq)]
enum Format {
    Json,
    Csv,
}

#[derive(Args)]
#[group(required = true, multiple = false, id = "source")]
struct SourceArgs {
    /// graph6 lines or a DIMACS .col file.
    #[arg(long = "in", value_name = "FILE")]
    input: Option<PathBuf>,
    /// All graphs on N vertices (or on A..=B with `A-B`), up to isomorphism.
    #[arg(long, value_name = "N")]
    exhaustive: Option<String>,
    /// COUNT samples of G(N, P) passing the filter.
    #[arg(long, value_name = "N,P,COUNT")]
    random: Option<String>,
}

#[derive(Args)]
struct Output {
    #[arg(long, value_name = "FILE")]
    out: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
    /// Per-graph wall-clock limit for the exact oracles.
    #[arg(long, value_name = "MS")]
    budget_ms: Option<u64>,
    /// Record per-graph elapsed time (makes reports run-dependent).
    #[arg(long)]
    timings: bool,
    /// Process graphs one at a time.
    #[arg(long)]
    sequential: bool,
}

#[derive(Args)]
struct Common {
    #[command(flatten)]
    source: SourceArgs,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Comma-separated flags; `a|b` for either, `not-a` for negation.
    #[arg(long, default_value = "")]
    filter: String,
    #[command(flatten)]
    output: Output,
}

struct Failure {
    code: u8,
    message: String,
}

fn fail(code: u8, message: impl Into<String>) -> Failure {
    Failure {
        code,
        message: message.into(),
    }
}

impl From<HarnessError> for Failure {
    fn from(e: HarnessError) -> Failure {
        match e {
            HarnessError::Corpus(c) => corpus_failure(c),
            HarnessError::Weights(m) => fail(USAGE, m),
            HarnessError::Report(m) => fail(PARSE, m),
        }
    }
}

fn corpus_failure(e: CorpusError) -> Failure {
    let code = match &e {
        CorpusError::Io { .. } => IO,
        CorpusError::Parse { .. } => PARSE,
        CorpusError::Budget(_) => BUDGET,
        CorpusError::TooLarge(_)
        | CorpusError::Invalid(_)
        | CorpusError::FilterExhausted { .. } => USAGE,
    };
    fail(code, e.to_string())
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| fail(IO, format!("cannot read {}: {e}", path.display())))
}

impl Output {
    fn options(&self) -> RunOptions {
        RunOptions {
            budget_ms: self.budget_ms,
            timings: self.timings,
            exec: if self.sequential {
                Execution::Sequential
            } else {
                Execution::Parallel
            },
        }
    }

    fn write(&self, text: &str) -> Result<(), Failure> {
        match &self.out {
            Some(path) => fs::write(path, text)
                .map_err(|e| fail(IO, format!("cannot write {}: {e}", path.display()))),
            None => std::io::stdout()
                .write_all(text.as_bytes())
                .map_err(|e| fail(IO, format!("cannot write to stdout: {e}"))),
        }
    }

    fn json_only(&self) -> Result<(), Failure> {
        if self.format == Format::Csv {
            return Err(fail(
                USAGE,
                "CSV output is only available for the color audit table",
            ));
        }
        Ok(())
    }
}

impl Common {
    fn spec(&self) -> Result<CorpusSpec, Failure> {
        let s = &self.source;
        let source = if let Some(path) = &s.input {
            Source::File { path: path.clone() }
        } else if let Some(x) = &s.exhaustive {
            Source::parse_exhaustive(x).map_err(|e| fail(USAGE, e.to_string()))?
        } else {
            let r = s.random.as_deref().expect("clap requires one source");
            Source::parse_random(r).map_err(|e| fail(USAGE, e.to_string()))?
        };
        let filter: Filter =
            self.filter
                .parse()
                .map_err(|e: graph_divisibility::corpus::FilterParseError| {
                    fail(USAGE, e.to_string())
                })?;
        Ok(CorpusSpec::new(source).filtered(filter).seeded(self.seed))
    }

    fn graphs(&self) -> Result<(CorpusSpec, Vec<Graph>), Failure> {
        let spec = self.spec()?;
        let graphs = generate_with(&spec, &Budget::default(), self.output.options().exec)
            .map_err(corpus_failure)?;
        Ok((spec, graphs))
    }
}

fn finish(report: RunReport, output: &Output, csv: Option<BoundKind>) -> Result<u8, Failure> {
    let text = match csv {
        Some(kind) => audit_csv(&report.audit_rows(kind)),
        None => report.to_json(),
    };
    output.write(&text)?;
    let counts: Vec<String> = report
        .summary
        .by_status
        .iter()
        .map(|(s, c)| format!("{s}={c}"))
        .collect();
    eprintln!(
        "{}: {} graphs; {}",
        report.command,
        report.summary.total,
        counts.join(" ")
    );
    Ok(report.exit_code() as u8)
}

fn run(cli: Cli) -> Result<u8, Failure> {
    match cli.command {
        Command::Classify(common) => {
            common.output.json_only()?;
            let (spec, graphs) = common.graphs()?;
            let report = cmd_classify(&graphs, &common.output.options(), json!({ "corpus": spec }));
            finish(report, &common.output, None)
        }
        Command::Divide {
            common,
            mode,
            weights,
        } => {
            common.output.json_only()?;
            let (spec, graphs) = common.graphs()?;
            let weight_spec = if weights == "unit" {
                WeightSpec::Unit
            } else {
                WeightSpec::parse(&read(Path::new(&weights))?).map_err(|e| fail(PARSE, e))?
            };
            let mode = Mode::from(mode);
            let params = json!({ "corpus": spec, "mode": mode, "weights": weights });
            let report = cmd_divide(
                &graphs,
                mode,
                &weight_spec,
                &common.output.options(),
                params,
            )?;
            finish(report, &common.output, None)
        }
        Command::Color { common, mode } => {
            let (spec, graphs) = common.graphs()?;
            let mode = Mode::from(mode);
            let params = json!({ "corpus": spec, "mode": mode });
            let report = cmd_color(&graphs, mode, &common.output.options(), params);
            let kind = match mode {
                Mode::Two => BoundKind::PowerOfTwo,
                Mode::Perfect => BoundKind::Quadratic,
            };
            finish(
                report,
                &common.output,
                (common.output.format == Format::Csv).then_some(kind),
            )
        }
        Command::Verify {
            division,
            graph,
            output,
        } => {
            output.json_only()?;
            let report_text = read(&division)?;
            let graphs = match &graph {
                Some(path) => Some(
                    parse_graph_text(&read(path)?)
                        .map_err(|e| fail(PARSE, format!("{}: {e}", path.display())))?,
                ),
                None => None,
            };
            let params = json!({ "report": division, "graph": graph });
            let report = cmd_verify(&report_text, graphs.as_deref(), &output.options(), params)?;
            finish(report, &output, None)
        }
        Command::Conjecture {
            max_n,
            spot_checks,
            seed,
            output,
        } => {
            output.json_only()?;
            let params = json!({ "max_n": max_n, "spot_checks": spot_checks, "seed": seed });
            let report = cmd_conjecture(max_n, spot_checks, seed, &output.options(), params)?;
            finish(report, &output, None)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("gdiv: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
