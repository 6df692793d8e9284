//! Division algorithms, their verifiers, and the brute-force
//! 2-divisibility oracle.
//!
//! Both division procedures check every answer against the exact oracles
//! before returning it. A failed check is reported as
//! [`DivisionError::InternalTheoremViolation`] together with the full
//! derivation log, so a run doubles as a proof check on small graphs.

mod c5;
mod oracle;
mod perfect;
mod two;
mod verify;

use serde::Serialize;
use thiserror::Error;

use crate::error::{BudgetExceeded, GraphError};
use crate::recognition::Embedding;
use crate::set::VertexSet;
use crate::weight::WeightFn;

pub use c5::{classify_against_c5, dominating_pair, C5Error, C5Relation};
pub use oracle::{is_two_divisible_oracle, two_divisibility_counterexample};
pub(crate) use perfect::{divide as perfect_divide_within, require_class as require_perfect_class};
pub use perfect::{
    find_perfect_nonneighborhood_vertex, perfect_divide, perfect_divide_unit, perfect_divide_with,
    quotient_by_homogeneous_set, recombine, QuotientStep,
};
pub use two::{two_divide, two_divide_recursive, two_divide_with, DivisionNode};
pub use verify::{
    verify_perfect_division, verify_perfect_division_within, verify_two_division, Violation,
};

/// Partition `(a, b)` with `ω(a) < ω(host)` and `ω(b) < ω(host)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TwoDivision {
    pub a: VertexSet,
    pub b: VertexSet,
}

/// Partition `(p, w_side)` with `host[p]` perfect and the maximum clique
/// weight of `host[w_side]` strictly below that of the host. `weights` is
/// `None` for the unweighted (unit weight) form.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PerfectDivision {
    pub p: VertexSet,
    pub w_side: VertexSet,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub weights: Option<WeightFn>,
}

/// A division together with the steps that produced it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Derived<D> {
    pub division: D,
    pub log: DerivationLog,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum PartitionRule {
    /// `(M(v) + v, N(v))`: every component of `M(v)` has a complete vertex in `N(v)`.
    NonNeighborhoodPlusRoot,
    /// `(N(n), rest)` for the chosen vertex `n`.
    NeighborhoodOfChosen,
    /// `(M(v) + v, N(v))` inside the positive-weight support.
    PerfectNonNeighborhood,
    /// All weights vanish.
    EmptySupport,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum RepresentativeSide {
    P,
    W,
}

/// One step of a derivation. Vertex ids are always host ids.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "step", rename_all = "kebab-case")]
pub enum DerivationStep {
    ComponentSplit {
        components: Vec<VertexSet>,
    },
    Restrict {
        support: VertexSet,
    },
    VertexChoice {
        role: &'static str,
        candidates: VertexSet,
        chosen: usize,
    },
    BasePartition {
        rule: PartitionRule,
        first: VertexSet,
        second: VertexSet,
    },
    Quotient {
        set: VertexSet,
        representative: usize,
        lifted_weight: u64,
    },
    Recombination {
        representative_in: RepresentativeSide,
        p: VertexSet,
        w_side: VertexSet,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LogEntry {
    pub depth: usize,
    #[serde(flatten)]
    pub step: DerivationStep,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct DerivationLog(pub Vec<LogEntry>);

impl DerivationLog {
    pub(crate) fn push(&mut self, depth: usize, step: DerivationStep) {
        self.0.push(LogEntry { depth, step });
    }

    pub fn entries(&self) -> &[LogEntry] {
        &self.0
    }

    pub fn has_quotient(&self) -> bool {
        self.0
            .iter()
            .any(|e| matches!(e.step, DerivationStep::Quotient { .. }))
    }
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum DivisionError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("graph is not {requirement}")]
    NotInClass {
        requirement: &'static str,
        witnesses: Vec<Embedding>,
    },
    #[error("clique number {omega} is at most 1; nothing to divide")]
    DegenerateClique1 { omega: u64 },
    #[error("set is not homogeneous")]
    NotHomogeneous,
    #[error("division inputs do not match the quotient step: {0}")]
    MismatchedInputs(&'static str),
    #[error("theorem violation: {reason}")]
    InternalTheoremViolation { reason: String, log: DerivationLog },
    #[error(transparent)]
    Budget(#[from] BudgetExceeded),
}

/// Maps an embedding found in `G[s]` (relabelled) back to host ids.
pub(crate) fn lift_embedding(mut e: Embedding, map: &[usize]) -> Embedding {
    for v in &mut e.vertices {
        *v = map[*v];
    }
    e
}

/// Maps a set over a relabelled induced subgraph back to the host.
pub(crate) fn lift_set(s: &VertexSet, map: &[usize], host_size: usize) -> VertexSet {
    VertexSet::from_members(host_size, s.iter().map(|v| map[v]))
}
