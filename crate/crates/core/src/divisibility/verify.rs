use thiserror::Error;

use crate::budget::Budget;
use crate::clique::{clique_number_within, max_weight_clique_within};
use crate::error::BudgetExceeded;
use crate::graph::Graph;
use crate::recognition::{imperfection_witness_with, Embedding};
use crate::set::VertexSet;
use crate::weight::WeightFn;

use super::{lift_embedding, PerfectDivision, TwoDivision};

/// The clause of a division's definition that failed.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Violation {
    #[error("the two sides do not partition the vertex set")]
    NotPartition,
    #[error("side {side} has clique value {side_value}, not below the host's {host_value}")]
    NotSmaller {
        side: &'static str,
        side_value: u64,
        host_value: u64,
    },
    #[error("perfect side contains an induced {}", witness.pattern)]
    Imperfect { witness: Embedding },
    #[error(transparent)]
    Budget(#[from] BudgetExceeded),
}

fn check_partition(domain: &VertexSet, x: &VertexSet, y: &VertexSet) -> Result<(), Violation> {
    if x.host_size() != domain.host_size() || y.host_size() != domain.host_size() {
        return Err(Violation::NotPartition);
    }
    if x.intersects(y) || x.union(y) != *domain {
        return Err(Violation::NotPartition);
    }
    Ok(())
}

pub fn verify_two_division(g: &Graph, d: &TwoDivision) -> Result<(), Violation> {
    verify_two_division_within(g, &g.vertices(), d)
}

pub(crate) fn verify_two_division_within(
    g: &Graph,
    domain: &VertexSet,
    d: &TwoDivision,
) -> Result<(), Violation> {
    check_partition(domain, &d.a, &d.b)?;
    let host_value = clique_number_within(g, domain).value;
    for (side, s) in [("A", &d.a), ("B", &d.b)] {
        let side_value = clique_number_within(g, s).value;
        if side_value >= host_value {
            return Err(Violation::NotSmaller {
                side,
                side_value,
                host_value,
            });
        }
    }
    Ok(())
}

pub fn verify_perfect_division(
    g: &Graph,
    w: &WeightFn,
    d: &PerfectDivision,
) -> Result<(), Violation> {
    if w.len() != g.order() {
        return Err(Violation::NotPartition);
    }
    verify_perfect_division_within(g, &g.vertices(), w, d, &Budget::default())
}

/// Checks `d` as a division of `G[domain]` under `w`.
///
/// When every clique of the domain weighs 0 no strictly lighter side can
/// exist; the weight clause is then skipped and only perfection is checked.
pub fn verify_perfect_division_within(
    g: &Graph,
    domain: &VertexSet,
    w: &WeightFn,
    d: &PerfectDivision,
    budget: &Budget,
) -> Result<(), Violation> {
    check_partition(domain, &d.p, &d.w_side)?;
    let (h, map) = g
        .induced_subgraph(&d.p)
        .map_err(|_| Violation::NotPartition)?;
    if let Some(witness) = imperfection_witness_with(&h, budget)? {
        return Err(Violation::Imperfect {
            witness: lift_embedding(witness, &map),
        });
    }
    let host_value = max_weight_clique_within(g, domain, w).value;
    if host_value == 0 {
        return Ok(());
    }
    let side_value = max_weight_clique_within(g, &d.w_side, w).value;
    if side_value >= host_value {
        return Err(Violation::NotSmaller {
            side: "W",
            side_value,
            host_value,
        });
    }
    Ok(())
}
