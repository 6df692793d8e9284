//! Graph corpora: exhaustive non-isomorphic enumeration, seeded random
//! sampling, and graph files, each passed through a class filter.
//!
//! A filter is a comma-separated conjunction of clauses; a clause is a
//! `|`-separated disjunction of flags, each optionally prefixed by `not-`.
//! Clauses built only from hereditary flags prune exhaustive generation
//! level by level, since every induced subgraph of a member is a member.

use std::collections::HashSet;
use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use thiserror::Error;

use crate::budget::Budget;
use crate::canon::{canonical_code, graph_from_code};
use crate::error::BudgetExceeded;
use crate::exec::Execution;
use crate::graph::Graph;
use crate::io::{parse_dimacs, parse_graph6_lines, ParseError};
use crate::recognition::{
    find_bull, find_c5, find_odd_hole_with, find_p5, is_perfect_with, is_prime,
};

pub const EXHAUSTIVE_MAX_N: usize = 10;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Flag {
    P5Free,
    C5Free,
    BullFree,
    OddHoleFree,
    Perfect,
    Connected,
    Prime,
}

impl Flag {
    const ALL: [(Flag, &'static str); 7] = [
        (Flag::P5Free, "p5free"),
        (Flag::C5Free, "c5free"),
        (Flag::BullFree, "bullfree"),
        (Flag::OddHoleFree, "oddholefree"),
        (Flag::Perfect, "perfect"),
        (Flag::Connected, "connected"),
        (Flag::Prime, "prime"),
    ];

    pub fn name(self) -> &'static str {
        Flag::ALL
            .iter()
            .find(|(f, _)| *f == self)
            .expect("listed")
            .1
    }

    /// Closed under induced subgraphs.
    pub fn is_hereditary(self) -> bool {
        !matches!(self, Flag::Connected | Flag::Prime)
    }

    pub fn holds(self, g: &Graph, budget: &Budget) -> Result<bool, BudgetExceeded> {
        Ok(match self {
            Flag::P5Free => find_p5(g).is_none(),
            Flag::C5Free => find_c5(g).is_none(),
            Flag::BullFree => find_bull(g).is_none(),
            Flag::OddHoleFree => find_odd_hole_with(g, budget)?.is_none(),
            Flag::Perfect => is_perfect_with(g, budget)?,
            Flag::Connected => g.is_connected(),
            Flag::Prime => is_prime(g),
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Literal {
    pub flag: Flag,
    pub negated: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Filter {
    /// Conjunction of disjunctions.
    pub clauses: Vec<Vec<Literal>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("unknown filter flag {0:?}; expected one of p5free, c5free, bullfree, oddholefree, perfect, connected, prime, optionally prefixed by not-")]
pub struct FilterParseError(pub String);

impl FromStr for Filter {
    type Err = FilterParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut clauses = Vec::new();
        for clause in s.split(',').map(str::trim).filter(|c| !c.is_empty()) {
            let mut lits = Vec::new();
            for word in clause.split('|').map(str::trim) {
                let (negated, name) = match word.strip_prefix("not-") {
                    Some(rest) => (true, rest),
                    None => (false, word),
                };
                let flag = Flag::ALL
                    .iter()
                    .find(|(_, n)| n.eq_ignore_ascii_case(name))
                    .map(|(f, _)| *f)
                    .ok_or_else(|| FilterParseError(word.to_string()))?;
                lits.push(Literal { flag, negated });
            }
            clauses.push(lits);
        }
        Ok(Filter { clauses })
    }
}

impl fmt::Display for Filter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let clauses: Vec<String> = self
            .clauses
            .iter()
            .map(|c| {
                c.iter()
                    .map(|l| format!("{}{}", if l.negated { "not-" } else { "" }, l.flag.name()))
                    .collect::<Vec<_>>()
                    .join("|")
            })
            .collect();
        f.write_str(&clauses.join(","))
    }
}

impl Serialize for Filter {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

fn clause_holds(clause: &[Literal], g: &Graph, budget: &Budget) -> Result<bool, BudgetExceeded> {
    for lit in clause {
        if lit.flag.holds(g, budget)? != lit.negated {
            return Ok(true);
        }
    }
    Ok(false)
}

fn is_hereditary_clause(clause: &[Literal]) -> bool {
    clause.iter().all(|l| !l.negated && l.flag.is_hereditary())
}

impl Filter {
    pub fn matches(&self, g: &Graph, budget: &Budget) -> Result<bool, BudgetExceeded> {
        for clause in &self.clauses {
            if !clause_holds(clause, g, budget)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// The clauses closed under induced subgraphs.
    pub fn hereditary_part(&self) -> Filter {
        Filter {
            clauses: self
                .clauses
                .iter()
                .filter(|c| is_hereditary_clause(c))
                .cloned()
                .collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Source {
    /// Every graph on `min_n..=max_n` vertices, one per isomorphism class.
    Exhaustive { min_n: usize, max_n: usize },
    /// `count` accepted samples of `G(n, p)`.
    Random { n: usize, p: f64, count: usize },
    /// graph6 lines or a single DIMACS graph.
    File { path: PathBuf },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("expected N or A-B for an exhaustive range, N,P,COUNT for a random source: {0:?}")]
pub struct SourceParseError(pub String);

impl Source {
    /// `N` or `A-B`.
    pub fn parse_exhaustive(s: &str) -> Result<Source, SourceParseError> {
        let bad = || SourceParseError(s.to_string());
        let (min_n, max_n) = match s.split_once('-') {
            Some((a, b)) => (
                a.trim().parse().map_err(|_| bad())?,
                b.trim().parse().map_err(|_| bad())?,
            ),
            None => {
                let n = s.trim().parse().map_err(|_| bad())?;
                (n, n)
            }
        };
        Ok(Source::Exhaustive { min_n, max_n })
    }

    /// `N,P,COUNT`.
    pub fn parse_random(s: &str) -> Result<Source, SourceParseError> {
        let bad = || SourceParseError(s.to_string());
        let parts: Vec<&str> = s.split(',').map(str::trim).collect();
        let [n, p, count] = parts[..] else {
            return Err(bad());
        };
        Ok(Source::Random {
            n: n.parse().map_err(|_| bad())?,
            p: p.parse().map_err(|_| bad())?,
            count: count.parse().map_err(|_| bad())?,
        })
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CorpusSpec {
    pub source: Source,
    pub filter: Filter,
    pub seed: u64,
    /// Random candidates drawn before giving up; `None` means `1000 * count`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub max_attempts: Option<usize>,
}

impl CorpusSpec {
    pub fn new(source: Source) -> Self {
        CorpusSpec {
            source,
            filter: Filter::default(),
            seed: 0,
            max_attempts: None,
        }
    }

    pub fn filtered(mut self, filter: Filter) -> Self {
        self.filter = filter;
        self
    }

    pub fn seeded(mut self, seed: u64) -> Self {
        self.seed = seed;
        self
    }
}

#[derive(Debug, Error)]
pub enum CorpusError {
    #[error("cannot read {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("{path}: {source}")]
    Parse {
        path: PathBuf,
        #[source]
        source: ParseError,
    },
    #[error("exhaustive enumeration is limited to n <= {EXHAUSTIVE_MAX_N}, got {0}")]
    TooLarge(usize),
    #[error("invalid corpus: {0}")]
    Invalid(String),
    #[error("filter accepted {accepted} of {wanted} graphs after {attempts} attempts")]
    FilterExhausted {
        accepted: usize,
        wanted: usize,
        attempts: usize,
    },
    #[error(transparent)]
    Budget(#[from] BudgetExceeded),
}

pub fn generate(spec: &CorpusSpec) -> Result<Vec<Graph>, CorpusError> {
    generate_with(spec, &Budget::default(), Execution::default())
}

/// Exhaustive output is in canonical labelling, ordered by order then
/// canonical code; random output in acceptance order; file output in line order.
pub fn generate_with(
    spec: &CorpusSpec,
    budget: &Budget,
    exec: Execution,
) -> Result<Vec<Graph>, CorpusError> {
    match &spec.source {
        Source::Exhaustive { min_n, max_n } => {
            exhaustive(*min_n, *max_n, &spec.filter, budget, exec)
        }
        Source::Random { n, p, count } => {
            let attempts = spec.max_attempts.unwrap_or(count.saturating_mul(1000));
            random(*n, *p, *count, spec.seed, attempts, &spec.filter, budget)
        }
        Source::File { path } => {
            let text = std::fs::read_to_string(path).map_err(|source| CorpusError::Io {
                path: path.clone(),
                source,
            })?;
            let graphs = parse_graph_text(&text).map_err(|source| CorpusError::Parse {
                path: path.clone(),
                source,
            })?;
            let keep = exec.map(&graphs, |g| spec.filter.matches(g, budget));
            let mut out = Vec::new();
            for (g, keep) in graphs.into_iter().zip(keep) {
                if keep? {
                    out.push(g);
                }
            }
            Ok(out)
        }
    }
}

/// A single DIMACS graph if the first non-blank line is a `c` or `p` line,
/// otherwise graph6 lines.
pub fn parse_graph_text(text: &str) -> Result<Vec<Graph>, ParseError> {
    let first = text
        .lines()
        .map(str::trim)
        .find(|l| !l.is_empty())
        .unwrap_or("");
    if first == "c" || first.starts_with("c ") || first.starts_with("p ") {
        Ok(vec![parse_dimacs(text)?])
    } else {
        parse_graph6_lines(text)
    }
}

const CHUNK: usize = 4096;

fn exhaustive(
    min_n: usize,
    max_n: usize,
    filter: &Filter,
    budget: &Budget,
    exec: Execution,
) -> Result<Vec<Graph>, CorpusError> {
    if max_n > EXHAUSTIVE_MAX_N {
        return Err(CorpusError::TooLarge(max_n));
    }
    if min_n > max_n {
        return Err(CorpusError::Invalid(format!("empty range {min_n}-{max_n}")));
    }
    let prune = filter.hereditary_part();
    let mut level: Vec<u128> = vec![0];
    let mut out = Vec::new();
    for n in 0..=max_n {
        if n > 0 {
            level = extend(&level, n - 1, &prune, budget, exec)?;
        }
        if n >= min_n {
            let graphs: Vec<Graph> = level.iter().map(|&c| graph_from_code(n, c)).collect();
            let keep = exec.map(&graphs, |g| filter.matches(g, budget));
            for (g, keep) in graphs.into_iter().zip(keep) {
                if keep? {
                    out.push(g);
                }
            }
        }
    }
    Ok(out)
}

/// Canonical codes of all one-vertex extensions of `level` (graphs on `k`
/// vertices) that pass `prune`, sorted.
fn extend(
    level: &[u128],
    k: usize,
    prune: &Filter,
    budget: &Budget,
    exec: Execution,
) -> Result<Vec<u128>, CorpusError> {
    let mut seen: HashSet<u128> = HashSet::new();
    for chunk in level.chunks(CHUNK) {
        let children = exec.map(chunk, |&code| {
            let parent = graph_from_code(k, code);
            let mut codes: Vec<u128> = (0u32..1 << k)
                .map(|mask| {
                    let child = Graph::from_fn(k + 1, |u, v| {
                        if v == k {
                            mask >> u & 1 == 1
                        } else {
                            parent.is_adjacent(u, v)
                        }
                    });
                    canonical_code(&child)
                })
                .collect();
            codes.sort_unstable();
            codes.dedup();
            codes
        });
        for codes in children {
            seen.extend(codes);
        }
    }
    let mut codes: Vec<u128> = seen.into_iter().collect();
    codes.sort_unstable();
    if prune.clauses.is_empty() {
        return Ok(codes);
    }
    let keep = exec.map(&codes, |&c| {
        prune.matches(&graph_from_code(k + 1, c), budget)
    });
    let mut out = Vec::with_capacity(codes.len());
    for (c, keep) in codes.into_iter().zip(keep) {
        if keep? {
            out.push(c);
        }
    }
    Ok(out)
}

/// Candidate `i` is drawn from stream `i` of the seeded generator, so the
/// accepted prefix does not depend on `count`.
pub fn random_candidate(n: usize, p: f64, seed: u64, i: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(i);
    let mut edges = Vec::new();
    for j in 1..n {
        for u in 0..j {
            if rng.random_bool(p) {
                edges.push((u, j));
            }
        }
    }
    Graph::from_edges(n, edges).expect("edges in range")
}

fn random(
    n: usize,
    p: f64,
    count: usize,
    seed: u64,
    max_attempts: usize,
    filter: &Filter,
    budget: &Budget,
) -> Result<Vec<Graph>, CorpusError> {
    if !(0.0..=1.0).contains(&p) {
        return Err(CorpusError::Invalid(format!(
            "edge probability {p} outside [0, 1]"
        )));
    }
    if count == 0 {
        return Err(CorpusError::Invalid(
            "random count must be at least 1".into(),
        ));
    }
    let mut out = Vec::with_capacity(count);
    let mut attempts = 0;
    while out.len() < count {
        if attempts == max_attempts {
            return Err(CorpusError::FilterExhausted {
                accepted: out.len(),
                wanted: count,
                attempts,
            });
        }
        let g = random_candidate(n, p, seed, attempts as u64);
        attempts += 1;
        if filter.matches(&g, budget)? {
            out.push(g);
        }
    }
    Ok(out)
}
