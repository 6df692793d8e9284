//! Brute-force 2-divisibility: every induced subgraph with an edge must split
//! into two parts of smaller clique number.

use crate::budget::{Budget, Ticker};
use crate::error::BudgetExceeded;
use crate::graph::Graph;
use crate::set::VertexSet;

/// `true` iff `g` is 2-divisible (subgraphs with clique number at most 1
/// are exempt).
pub fn is_two_divisible_oracle(g: &Graph, budget: &Budget) -> Result<bool, BudgetExceeded> {
    Ok(two_divisibility_counterexample(g, budget)?.is_none())
}

/// The first induced subgraph (in bitmask order of its vertex set) with at
/// least one edge that admits no 2-division.
pub fn two_divisibility_counterexample(
    g: &Graph,
    budget: &Budget,
) -> Result<Option<VertexSet>, BudgetExceeded> {
    let n = g.order();
    Budget::check_size("two-divisible", budget.two_divisible_max_n.min(24), n)?;
    let adj: Vec<u32> = (0..n)
        .map(|v| g.adj(v).iter().fold(0u32, |m, u| m | 1 << u))
        .collect();
    let mut ticker = budget.ticker("two-divisible");
    for subset in 1u32..(1u32 << n) {
        ticker.tick()?;
        let (omega, cliques) = maximum_cliques(&adj, subset);
        if omega <= 1 {
            continue;
        }
        if !has_bipartition(subset, &cliques, &mut ticker)? {
            return Ok(Some(VertexSet::from_members(
                n,
                (0..n).filter(|&i| subset >> i & 1 == 1),
            )));
        }
    }
    Ok(None)
}

/// Clique number of the subset and all cliques attaining it.
fn maximum_cliques(adj: &[u32], subset: u32) -> (u32, Vec<u32>) {
    let mut best = 0;
    let mut out = Vec::new();
    grow(adj, 0, subset, &mut best, &mut out);
    (best, out)
}

fn grow(adj: &[u32], clique: u32, cand: u32, best: &mut u32, out: &mut Vec<u32>) {
    let size = clique.count_ones();
    if size + cand.count_ones() < *best {
        return;
    }
    if cand == 0 {
        if size > *best {
            *best = size;
            out.clear();
        }
        if size == *best {
            out.push(clique);
        }
        return;
    }
    let v = cand.trailing_zeros();
    let rest = cand & !(1 << v);
    grow(adj, clique | 1 << v, rest & adj[v as usize], best, out);
    grow(adj, clique, rest, best, out);
}

/// Is there `A ⊆ subset` such that no maximum clique lies inside `A` or
/// inside `subset \ A`?
fn has_bipartition(
    subset: u32,
    cliques: &[u32],
    ticker: &mut Ticker,
) -> Result<bool, BudgetExceeded> {
    let first = subset & subset.wrapping_neg();
    let rest = subset & !first;
    // Enumerate submasks of `rest`; the lowest vertex is fixed on side A.
    let mut sub = rest;
    loop {
        ticker.tick()?;
        let a = sub | first;
        if cliques.iter().all(|&k| k & a != k && k & a != 0) {
            return Ok(true);
        }
        if sub == 0 {
            return Ok(false);
        }
        sub = (sub - 1) & rest;
    }
}
