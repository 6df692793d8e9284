//! Batch runs over a corpus and the JSON run report.
//!
//! Each graph is processed independently and yields one [`Record`]. Records
//! are sorted by graph6 string, so a report depends only on its inputs and
//! the seed; `generated_at` is the only field that varies between runs,
//! and per-record timings appear only when requested.

use std::collections::BTreeMap;
use std::fmt;
use std::time::{Duration, Instant, SystemTime, UNIX_EPOCH};

use serde::Serialize;
use serde_json::Value;
use thiserror::Error;

use crate::budget::Budget;
use crate::canon::{are_isomorphic, canonical_form};
use crate::chromatic::chromatic_number_exact_with;
use crate::clique::clique_number;
use crate::coloring::{
    color_via_perfect_division_with, color_via_two_division, AuditRow, BoundCertificate, BoundKind,
    ClassHint, Coloring, ColoringOutcome, PaletteBlock,
};
use crate::corpus::{generate_with, CorpusError, CorpusSpec, Filter, Source};
use crate::divisibility::{
    perfect_divide_with, two_divide, two_divisibility_counterexample, verify_perfect_division,
    verify_two_division, DerivationLog, DivisionError, PerfectDivision, TwoDivision,
};
use crate::exec::Execution;
use crate::graph::families::cycle;
use crate::graph::Graph;
use crate::io::{emit_graph6, parse_graph6};
use crate::recognition::{classify_with, ClassReport, Embedding};
use crate::set::VertexSet;
use crate::weight::WeightFn;

pub const SCHEMA: u32 = 1;

/// Outcome of one record, in increasing order of severity.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Ok,
    /// Nothing to divide (`ω ≤ 1`).
    Skipped,
    ClassViolation,
    BudgetExceeded,
    VerificationFailure,
    /// An odd-hole-free graph the oracle found not 2-divisible.
    Counterexample,
    TheoremViolation,
}

impl Status {
    /// Process exit status for a run whose most severe record has this status.
    pub fn exit_code(self) -> i32 {
        match self {
            Status::Ok | Status::Skipped => 0,
            Status::VerificationFailure | Status::Counterexample => 1,
            Status::ClassViolation => 4,
            Status::TheoremViolation => 5,
            Status::BudgetExceeded => 6,
        }
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let v = serde_json::to_value(self).expect("serialisable");
        f.write_str(v.as_str().expect("unit variant"))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Mode {
    Two,
    Perfect,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum StoredDivision {
    Two {
        a: VertexSet,
        b: VertexSet,
    },
    Perfect {
        p: VertexSet,
        w_side: VertexSet,
        #[serde(skip_serializing_if = "Option::is_none")]
        weights: Option<WeightFn>,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StoredColoring {
    pub assignment: Vec<usize>,
    pub certificate: BoundCertificate,
    pub blocks: Vec<PaletteBlock>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub check: &'static str,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

impl Verdict {
    fn new(check: &'static str, result: Result<(), String>) -> Self {
        Verdict {
            check,
            passed: result.is_ok(),
            detail: result.err(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Record {
    pub graph6: String,
    pub n: usize,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub message: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub class: Option<ClassReport>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub witnesses: Vec<Embedding>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub division: Option<StoredDivision>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub coloring: Option<StoredColoring>,
    /// Exact chromatic number, when computed within budget.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub chi: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub two_divisible: Option<bool>,
    /// Induced subgraph that admits no 2-division.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub obstruction: Option<VertexSet>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub verdicts: Vec<Verdict>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub log: Option<DerivationLog>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed_us: Option<u64>,
}

impl Record {
    fn new(g: &Graph) -> Self {
        Record {
            graph6: emit_graph6(g),
            n: g.order(),
            status: Status::Ok,
            message: None,
            class: None,
            witnesses: Vec::new(),
            division: None,
            coloring: None,
            chi: None,
            two_divisible: None,
            obstruction: None,
            verdicts: Vec::new(),
            log: None,
            elapsed_us: None,
        }
    }

    fn fail(&mut self, status: Status, message: impl Into<String>) {
        self.status = self.status.max(status);
        self.message.get_or_insert_with(|| message.into());
    }

    fn push_verdict(&mut self, verdict: Verdict) {
        if !verdict.passed {
            let detail = verdict.detail.clone().unwrap_or_default();
            self.fail(
                Status::VerificationFailure,
                format!("{}: {detail}", verdict.check),
            );
        }
        self.verdicts.push(verdict);
    }

    fn division_error(&mut self, e: DivisionError) {
        match e {
            DivisionError::NotInClass {
                requirement,
                witnesses,
            } => {
                self.fail(
                    Status::ClassViolation,
                    format!("graph is not {requirement}"),
                );
                self.witnesses = witnesses;
            }
            DivisionError::DegenerateClique1 { .. } => self.fail(Status::Skipped, e.to_string()),
            DivisionError::Budget(b) => self.fail(Status::BudgetExceeded, b.to_string()),
            DivisionError::InternalTheoremViolation { reason, log } => {
                self.fail(Status::TheoremViolation, reason);
                self.log = Some(log);
            }
            other => self.fail(Status::TheoremViolation, other.to_string()),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub total: usize,
    pub by_status: BTreeMap<Status, usize>,
    pub exit_status: i32,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RunReport {
    pub schema: u32,
    /// Unix seconds; excluded from reproducibility comparisons.
    pub generated_at: u64,
    pub command: &'static str,
    pub params: Value,
    pub summary: Summary,
    pub records: Vec<Record>,
}

impl RunReport {
    pub fn new(command: &'static str, params: Value, mut records: Vec<Record>) -> Self {
        records.sort_by(|a, b| a.graph6.cmp(&b.graph6));
        let mut by_status = BTreeMap::new();
        for r in &records {
            *by_status.entry(r.status).or_insert(0) += 1;
        }
        let worst = records.iter().map(|r| r.status).max().unwrap_or(Status::Ok);
        let generated_at = SystemTime::now()
            .duration_since(UNIX_EPOCH)
            .map_or(0, |d| d.as_secs());
        RunReport {
            schema: SCHEMA,
            generated_at,
            command,
            params,
            summary: Summary {
                total: records.len(),
                by_status,
                exit_status: worst.exit_code(),
            },
            records,
        }
    }

    pub fn exit_code(&self) -> i32 {
        self.summary.exit_status
    }

    /// Audit table of a `color` report: one row per record, keyed by graph6.
    pub fn audit_rows(&self, kind: BoundKind) -> Vec<AuditRow> {
        self.records
            .iter()
            .map(|r| {
                let omega = match &r.coloring {
                    Some(c) => c.certificate.omega,
                    None => parse_graph6(&r.graph6).map_or(0, |g| clique_number(&g).value),
                };
                let cert = r.coloring.as_ref().map(|c| c.certificate);
                let bound = kind.value(omega);
                AuditRow {
                    id: r.graph6.clone(),
                    omega,
                    chi: r.chi,
                    used: cert.map(|c| c.colors_used),
                    bound,
                    slack: cert.map(|c| bound as i64 - c.colors_used as i64),
                    error: r.message.clone().filter(|_| r.status != Status::Ok),
                }
            })
            .collect()
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serialises");
        s.push('\n');
        s
    }

    /// The report as JSON with `generated_at` removed.
    pub fn comparable(&self) -> Value {
        let mut v = serde_json::to_value(self).expect("report serialises");
        v.as_object_mut().expect("object").remove("generated_at");
        v
    }
}

/// Per-vertex weights: unit, or one line per input graph (a single line
/// applies to every graph).
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub enum WeightSpec {
    #[default]
    Unit,
    Lines(Vec<Vec<u64>>),
}

impl WeightSpec {
    pub fn parse(text: &str) -> Result<WeightSpec, String> {
        let mut lines = Vec::new();
        for (i, line) in text.lines().enumerate() {
            if line.trim().is_empty() || line.trim_start().starts_with('#') {
                continue;
            }
            let row: Result<Vec<u64>, _> = line.split_whitespace().map(str::parse).collect();
            lines.push(row.map_err(|e| format!("weights line {}: {e}", i + 1))?);
        }
        if lines.is_empty() {
            return Err("weights file has no lines".into());
        }
        Ok(WeightSpec::Lines(lines))
    }

    /// Weights for input graph `index`.
    pub fn for_graph(&self, index: usize, g: &Graph) -> Result<WeightFn, String> {
        let row = match self {
            WeightSpec::Unit => return Ok(WeightFn::unit(g.order())),
            WeightSpec::Lines(lines) if lines.len() == 1 => &lines[0],
            WeightSpec::Lines(lines) => lines
                .get(index)
                .ok_or_else(|| format!("no weights line for graph {}", index + 1))?,
        };
        WeightFn::new(g, row.clone()).map_err(|e| format!("graph {}: {e}", index + 1))
    }
}

#[derive(Debug, Clone, Default)]
pub struct RunOptions {
    /// Per-graph wall-clock limit for the exact oracles.
    pub budget_ms: Option<u64>,
    pub timings: bool,
    pub exec: Execution,
}

impl RunOptions {
    fn budget(&self) -> Budget {
        match self.budget_ms {
            Some(ms) => Budget::default().with_time_limit(Duration::from_millis(ms)),
            None => Budget::default(),
        }
    }

    fn run<T: Sync>(
        &self,
        items: &[T],
        f: impl Fn(&T, &Budget) -> Record + Sync + Send,
    ) -> Vec<Record> {
        self.exec.map(items, |item| {
            let start = Instant::now();
            let mut record = f(item, &self.budget());
            if self.timings {
                record.elapsed_us = Some(start.elapsed().as_micros() as u64);
            }
            record
        })
    }
}

#[derive(Debug, Error)]
pub enum HarnessError {
    #[error(transparent)]
    Corpus(#[from] CorpusError),
    #[error("{0}")]
    Weights(String),
    #[error("malformed report: {0}")]
    Report(String),
}

fn classify_record(g: &Graph, budget: &Budget) -> Record {
    let mut r = Record::new(g);
    match classify_with(g, budget) {
        Ok(c) => r.class = Some(c),
        Err(e) => r.fail(Status::BudgetExceeded, e.to_string()),
    }
    r
}

pub fn cmd_classify(graphs: &[Graph], opts: &RunOptions, params: Value) -> RunReport {
    RunReport::new("classify", params, opts.run(graphs, classify_record))
}

fn two_record(g: &Graph) -> Record {
    let mut r = Record::new(g);
    match two_divide(g) {
        Ok(out) => {
            let verdict = verify_two_division(g, &out.division).map_err(|v| v.to_string());
            let TwoDivision { a, b } = out.division;
            r.division = Some(StoredDivision::Two { a, b });
            r.log = Some(out.log);
            r.push_verdict(Verdict::new("two-division", verdict));
        }
        Err(e) => r.division_error(e),
    }
    r
}

fn perfect_record(g: &Graph, w: &WeightFn, budget: &Budget) -> Record {
    let mut r = Record::new(g);
    match perfect_divide_with(g, w, budget) {
        Ok(out) => {
            let verdict = match verify_perfect_division(g, w, &out.division) {
                Err(crate::divisibility::Violation::Budget(b)) => {
                    r.fail(Status::BudgetExceeded, b.to_string());
                    None
                }
                other => Some(other.map_err(|v| v.to_string())),
            };
            let PerfectDivision { p, w_side, weights } = out.division;
            r.division = Some(StoredDivision::Perfect { p, w_side, weights });
            r.log = Some(out.log);
            if let Some(v) = verdict {
                r.push_verdict(Verdict::new("perfect-division", v));
            }
        }
        Err(e) => r.division_error(e),
    }
    r
}

pub fn cmd_divide(
    graphs: &[Graph],
    mode: Mode,
    weights: &WeightSpec,
    opts: &RunOptions,
    params: Value,
) -> Result<RunReport, HarnessError> {
    let records = match mode {
        Mode::Two => opts.run(graphs, |g, _| two_record(g)),
        Mode::Perfect => {
            let items: Vec<(&Graph, WeightFn)> = graphs
                .iter()
                .enumerate()
                .map(|(i, g)| weights.for_graph(i, g).map(|w| (g, w)))
                .collect::<Result<_, _>>()
                .map_err(HarnessError::Weights)?;
            opts.run(&items, |(g, w), b| perfect_record(g, w, b))
        }
    };
    Ok(RunReport::new("divide", params, records))
}

/// Independent checks of a stored colouring, with `χ` when within budget.
fn coloring_verdicts(
    g: &Graph,
    c: &StoredColoring,
    budget: &Budget,
) -> (Vec<Verdict>, Option<usize>) {
    let coloring = Coloring::from_assignment(c.assignment.clone());
    let proper = if coloring.is_proper(g) {
        Ok(())
    } else {
        Err("an edge is monochromatic or the assignment has the wrong length".to_string())
    };
    let omega = clique_number(g).value;
    let cert = c.certificate;
    let bound = cert.kind.value(omega);
    let within = if cert.omega != omega || cert.bound_value != bound {
        Err(format!(
            "certificate claims omega {} and bound {}, recomputed {omega} and {bound}",
            cert.omega, cert.bound_value
        ))
    } else if coloring.palette_size() != cert.colors_used || cert.colors_used as u64 > bound {
        Err(format!(
            "{} colours used, bound {bound}",
            coloring.palette_size()
        ))
    } else {
        Ok(())
    };
    let outcome = ColoringOutcome {
        coloring,
        certificate: cert,
        blocks: c.blocks.clone(),
        log: DerivationLog::default(),
    };
    let blocks = if outcome.blocks_are_consistent(g.order()) {
        Ok(())
    } else {
        Err("palette blocks overlap or do not cover the graph".to_string())
    };
    let mut out = vec![
        Verdict::new("proper", proper),
        Verdict::new("within-bound", within),
        Verdict::new("palette-blocks", blocks),
    ];
    let chi = chromatic_number_exact_with(g, budget)
        .ok()
        .map(|(chi, _)| chi);
    if let Some(chi) = chi {
        let used = outcome.coloring.palette_size();
        let check = if used >= chi {
            Ok(())
        } else {
            Err(format!("{used} colours below chi {chi}"))
        };
        out.push(Verdict::new("at-least-chi", check));
    }
    (out, chi)
}

fn color_record(g: &Graph, mode: Mode, budget: &Budget) -> Record {
    let mut r = Record::new(g);
    let outcome = match mode {
        Mode::Two => color_via_two_division(g),
        Mode::Perfect => color_via_perfect_division_with(g, ClassHint::Detect, budget),
    };
    match outcome {
        Ok(out) => {
            let stored = StoredColoring {
                assignment: out.coloring.assignment().to_vec(),
                certificate: out.certificate,
                blocks: out.blocks,
            };
            let (verdicts, chi) = coloring_verdicts(g, &stored, budget);
            verdicts.into_iter().for_each(|v| r.push_verdict(v));
            r.chi = chi;
            r.coloring = Some(stored);
            r.log = Some(out.log);
        }
        Err(e) => r.division_error(e),
    }
    r
}

pub fn cmd_color(graphs: &[Graph], mode: Mode, opts: &RunOptions, params: Value) -> RunReport {
    RunReport::new(
        "color",
        params,
        opts.run(graphs, |g, b| color_record(g, mode, b)),
    )
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
enum Side {
    /// Odd-hole-free: the open direction of the conjecture.
    Sufficiency,
    /// Contains an odd hole: must not be 2-divisible.
    Necessity,
}

fn conjecture_record(g: &Graph, side: Side, budget: &Budget) -> Record {
    let mut r = Record::new(g);
    match two_divisibility_counterexample(g, budget) {
        Ok(obstruction) => {
            r.two_divisible = Some(obstruction.is_none());
            match (side, &obstruction) {
                (Side::Sufficiency, Some(_)) => r.fail(
                    Status::Counterexample,
                    "odd-hole-free graph is not 2-divisible",
                ),
                (Side::Necessity, None) => r.fail(
                    Status::TheoremViolation,
                    "graph with an odd hole is 2-divisible",
                ),
                _ => {}
            }
            r.obstruction = obstruction;
        }
        Err(e) => r.fail(Status::BudgetExceeded, e.to_string()),
    }
    r.message
        .get_or_insert_with(|| format!("{side:?}").to_lowercase());
    r
}

pub const CONJECTURE_MAX_N: usize = 10;

/// Runs the 2-divisibility oracle on every odd-hole-free graph with at most
/// `max_n` vertices, and on a necessity sample: odd cycles up to `max_n`
/// plus `spot_checks` seeded `G(max_n, 1/2)` graphs containing an odd hole,
/// deduplicated up to isomorphism.
pub fn cmd_conjecture(
    max_n: usize,
    spot_checks: usize,
    seed: u64,
    opts: &RunOptions,
    params: Value,
) -> Result<RunReport, HarnessError> {
    if max_n > CONJECTURE_MAX_N {
        return Err(CorpusError::TooLarge(max_n).into());
    }
    let budget = Budget::default();
    let free = generate_with(
        &CorpusSpec::new(Source::Exhaustive {
            min_n: 1.min(max_n),
            max_n,
        })
        .filtered(parse_filter("oddholefree")),
        &budget,
        opts.exec,
    )?;
    let mut items: Vec<(Graph, Side)> = free.into_iter().map(|g| (g, Side::Sufficiency)).collect();
    let mut sample: Vec<Graph> = (5..=max_n).step_by(2).map(cycle).collect();
    if max_n >= 5 && spot_checks > 0 {
        let spec = CorpusSpec::new(Source::Random {
            n: max_n,
            p: 0.5,
            count: spot_checks,
        })
        .filtered(parse_filter("not-oddholefree"))
        .seeded(seed);
        sample.extend(generate_with(&spec, &budget, opts.exec)?);
    }
    let mut seen = std::collections::HashSet::new();
    for g in sample {
        let g = canonical_form(&g);
        if seen.insert(emit_graph6(&g)) {
            items.push((g, Side::Necessity));
        }
    }
    let records = opts.run(&items, |(g, side), b| conjecture_record(g, *side, b));
    Ok(RunReport::new("conjecture", params, records))
}

fn parse_filter(s: &str) -> Filter {
    s.parse().expect("built-in filter")
}

fn set_from(value: &Value, n: usize) -> Result<VertexSet, String> {
    let members: Vec<usize> = serde_json::from_value(value.clone()).map_err(|e| e.to_string())?;
    VertexSet::try_from_members(n, members).map_err(|e| e.to_string())
}

fn verify_stored(g: &Graph, rec: &Value, budget: &Budget) -> Result<Vec<Verdict>, String> {
    let n = g.order();
    let mut out = Vec::new();
    if let Some(d) = rec.get("division") {
        let field = |k: &str| d.get(k).ok_or_else(|| format!("division has no {k:?}"));
        match d.get("kind").and_then(Value::as_str) {
            Some("two") => {
                let div = TwoDivision {
                    a: set_from(field("a")?, n)?,
                    b: set_from(field("b")?, n)?,
                };
                out.push(Verdict::new(
                    "two-division",
                    verify_two_division(g, &div).map_err(|v| v.to_string()),
                ));
            }
            Some("perfect") => {
                let w = match d.get("weights") {
                    Some(ws) => {
                        let ws: Vec<u64> =
                            serde_json::from_value(ws.clone()).map_err(|e| e.to_string())?;
                        WeightFn::new(g, ws).map_err(|e| e.to_string())?
                    }
                    None => WeightFn::unit(n),
                };
                let div = PerfectDivision {
                    p: set_from(field("p")?, n)?,
                    w_side: set_from(field("w_side")?, n)?,
                    weights: None,
                };
                out.push(Verdict::new(
                    "perfect-division",
                    verify_perfect_division(g, &w, &div).map_err(|v| v.to_string()),
                ));
            }
            other => return Err(format!("unknown division kind {other:?}")),
        }
    }
    if let Some(c) = rec.get("coloring") {
        let stored = parse_coloring(c, n)?;
        out.extend(coloring_verdicts(g, &stored, budget).0);
    }
    Ok(out)
}

fn parse_coloring(c: &Value, n: usize) -> Result<StoredColoring, String> {
    let assignment: Vec<usize> =
        serde_json::from_value(c.get("assignment").cloned().unwrap_or(Value::Null))
            .map_err(|e| e.to_string())?;
    let cert = c.get("certificate").ok_or("coloring has no certificate")?;
    let num = |k: &str| {
        cert.get(k)
            .and_then(Value::as_u64)
            .ok_or_else(|| format!("certificate has no {k:?}"))
    };
    let kind = match cert.get("kind").and_then(Value::as_str) {
        Some("power-of-two") => BoundKind::PowerOfTwo,
        Some("quadratic") => BoundKind::Quadratic,
        other => return Err(format!("unknown bound kind {other:?}")),
    };
    let certificate = BoundCertificate {
        omega: num("omega")?,
        kind,
        bound_value: num("bound_value")?,
        colors_used: num("colors_used")? as usize,
    };
    let mut blocks = Vec::new();
    for b in c
        .get("blocks")
        .and_then(Value::as_array)
        .ok_or("coloring has no blocks")?
    {
        let range = b.get("colors").ok_or("block has no colours")?;
        let end = |k: &str| {
            range
                .get(k)
                .and_then(Value::as_u64)
                .ok_or("malformed colour range")
        };
        blocks.push(PaletteBlock {
            vertices: set_from(b.get("vertices").ok_or("block has no vertices")?, n)?,
            colors: end("start")? as usize..end("end")? as usize,
        });
    }
    Ok(StoredColoring {
        assignment,
        certificate,
        blocks,
    })
}

/// Equal graph6 strings, or isomorphic graphs when canonical forms apply.
fn same_graph(g: &Graph, g6: &str) -> bool {
    if emit_graph6(g) == g6 {
        return true;
    }
    match parse_graph6(g6) {
        Ok(h) if h.order() <= crate::canon::MAX_N && g.order() <= crate::canon::MAX_N => {
            are_isomorphic(g, &h)
        }
        _ => false,
    }
}

/// Re-checks every division and colouring stored in `report`. With
/// `graphs`, only records isomorphic to one of them are checked, and a
/// graph with no stored record fails.
pub fn cmd_verify(
    report: &str,
    graphs: Option<&[Graph]>,
    opts: &RunOptions,
    params: Value,
) -> Result<RunReport, HarnessError> {
    let value: Value =
        serde_json::from_str(report).map_err(|e| HarnessError::Report(e.to_string()))?;
    if value.get("schema").and_then(Value::as_u64) != Some(SCHEMA as u64) {
        return Err(HarnessError::Report(format!(
            "expected \"schema\": {SCHEMA}"
        )));
    }
    let stored: Vec<&Value> = value
        .get("records")
        .and_then(Value::as_array)
        .ok_or_else(|| HarnessError::Report("no records array".into()))?
        .iter()
        .filter(|r| r.get("division").is_some() || r.get("coloring").is_some())
        .collect();
    let mut items: Vec<(String, Option<&Value>)> = Vec::new();
    for r in &stored {
        let g6 = r
            .get("graph6")
            .and_then(Value::as_str)
            .ok_or_else(|| HarnessError::Report("record without graph6".into()))?;
        items.push((g6.to_string(), Some(*r)));
    }
    if let Some(graphs) = graphs {
        let mut selected: Vec<(String, Option<&Value>)> = Vec::new();
        for g in graphs {
            let matching: Vec<_> = items
                .iter()
                .filter(|(g6, _)| same_graph(g, g6))
                .cloned()
                .collect();
            if matching.is_empty() {
                selected.push((emit_graph6(g), None));
            }
            selected.extend(matching);
        }
        items = selected;
    }
    let records = opts.run(&items, |(g6, rec), budget| {
        let g = match parse_graph6(g6) {
            Ok(g) => g,
            Err(e) => {
                let mut r = Record::new(&Graph::empty(0));
                r.graph6 = g6.clone();
                r.fail(
                    Status::VerificationFailure,
                    format!("stored graph6 does not parse: {e}"),
                );
                return r;
            }
        };
        let mut r = Record::new(&g);
        match rec {
            None => r.fail(
                Status::VerificationFailure,
                "report stores no division or colouring for this graph",
            ),
            Some(rec) => match verify_stored(&g, rec, budget) {
                Ok(verdicts) => verdicts.into_iter().for_each(|v| r.push_verdict(v)),
                Err(e) => r.fail(Status::VerificationFailure, e),
            },
        }
        r
    });
    Ok(RunReport::new("verify", params, records))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families::*;
    use crate::recognition::PatternKind;

    fn opts() -> RunOptions {
        RunOptions::default()
    }

    #[test]
    fn c5_is_a_class_violation_for_two_division() {
        let report = cmd_divide(
            &[cycle(5)],
            Mode::Two,
            &WeightSpec::Unit,
            &opts(),
            Value::Null,
        )
        .unwrap();
        assert_eq!(report.exit_code(), 4);
        assert_eq!(report.records[0].witnesses[0].pattern, PatternKind::C5);
    }

    #[test]
    fn exit_status_precedence() {
        let report = RunReport::new(
            "divide",
            Value::Null,
            vec![
                {
                    let mut r = Record::new(&cycle(4));
                    r.fail(Status::ClassViolation, "x");
                    r
                },
                {
                    let mut r = Record::new(&cycle(5));
                    r.fail(Status::BudgetExceeded, "y");
                    r
                },
            ],
        );
        assert_eq!(report.exit_code(), 6);
        assert_eq!(Status::TheoremViolation.exit_code(), 5);
        assert_eq!(Status::Skipped.exit_code(), 0);
    }

    #[test]
    fn stored_results_reverify() {
        let graphs = [
            cycle(5),
            complete(4),
            cycle(4).with_twin(0, true).unwrap(),
            Graph::empty(2),
        ];
        for report in [
            cmd_color(&graphs, Mode::Perfect, &opts(), Value::Null),
            cmd_color(&graphs[1..], Mode::Two, &opts(), Value::Null),
            cmd_divide(
                &graphs[..1],
                Mode::Perfect,
                &WeightSpec::parse("3 0 1 2 5").unwrap(),
                &opts(),
                Value::Null,
            )
            .unwrap(),
            cmd_divide(
                &graphs[1..],
                Mode::Two,
                &WeightSpec::Unit,
                &opts(),
                Value::Null,
            )
            .unwrap(),
        ] {
            assert_eq!(report.exit_code(), 0, "{}", report.to_json());
            let again = cmd_verify(&report.to_json(), None, &opts(), Value::Null).unwrap();
            assert_eq!(again.exit_code(), 0, "{}", again.to_json());
            assert!(again.records.iter().all(|r| !r.verdicts.is_empty()));
        }
    }

    #[test]
    fn tampered_division_fails_verification() {
        let report = cmd_divide(
            &[cycle(4)],
            Mode::Two,
            &WeightSpec::Unit,
            &opts(),
            Value::Null,
        )
        .unwrap();
        let mut v: Value = serde_json::from_str(&report.to_json()).unwrap();
        v["records"][0]["division"]["a"] = serde_json::json!([0, 1]);
        v["records"][0]["division"]["b"] = serde_json::json!([2, 3]);
        let out = cmd_verify(&v.to_string(), None, &opts(), Value::Null).unwrap();
        assert_eq!(out.exit_code(), 1);
        let relabelled = cmd_verify(
            &report.to_json(),
            Some(&[cycle(4).permuted(&[1, 3, 0, 2])]),
            &opts(),
            Value::Null,
        )
        .unwrap();
        assert_eq!((relabelled.exit_code(), relabelled.records.len()), (0, 1));
        let missing =
            cmd_verify(&report.to_json(), Some(&[cycle(6)]), &opts(), Value::Null).unwrap();
        assert_eq!(missing.exit_code(), 1);
        assert!(cmd_verify("{}", None, &opts(), Value::Null).is_err());
    }

    #[test]
    fn weights_files() {
        let w = WeightSpec::parse("1 2 3\n# comment\n4 5 6\n").unwrap();
        assert_eq!(w.for_graph(1, &path(3)).unwrap().as_slice(), &[4, 5, 6]);
        assert!(w.for_graph(2, &path(3)).is_err());
        assert!(w.for_graph(0, &path(4)).is_err());
        assert!(WeightSpec::parse("1 x").is_err());
        let single = WeightSpec::parse("7 7").unwrap();
        assert_eq!(single.for_graph(5, &path(2)).unwrap().as_slice(), &[7, 7]);
    }

    #[test]
    fn conjecture_small_cases() {
        let r = cmd_conjecture(5, 20, 1, &opts(), Value::Null).unwrap();
        assert_eq!(r.exit_code(), 0);
        let c5 = emit_graph6(&canonical_form(&cycle(5)));
        let rec = r.records.iter().find(|x| x.graph6 == c5).unwrap();
        assert_eq!(rec.two_divisible, Some(false));
        assert!(
            r.records
                .iter()
                .filter(|x| x.two_divisible == Some(false))
                .count()
                == 1
        );

        let r = cmd_conjecture(1, 20, 1, &opts(), Value::Null).unwrap();
        assert_eq!(r.exit_code(), 0);
        assert_eq!(r.records.len(), 1);
        assert!(cmd_conjecture(11, 0, 0, &opts(), Value::Null).is_err());
    }

    #[test]
    fn reports_are_reproducible_across_execution_modes() {
        let graphs = generate_with(
            &CorpusSpec::new(Source::Random {
                n: 7,
                p: 0.5,
                count: 30,
            })
            .seeded(3),
            &Budget::default(),
            Execution::Sequential,
        )
        .unwrap();
        let seq = RunOptions {
            exec: Execution::Sequential,
            ..opts()
        };
        let a = cmd_color(&graphs, Mode::Perfect, &seq, Value::Null);
        let b = cmd_color(&graphs, Mode::Perfect, &opts(), Value::Null);
        assert_eq!(a.comparable(), b.comparable());
    }
}
