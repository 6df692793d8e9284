//! Exact maximum (weight) clique by bitset branch and bound with a greedy
//! colouring bound.

use serde::Serialize;

use crate::error::GraphError;
use crate::graph::Graph;
use crate::set::VertexSet;
use crate::weight::WeightFn;

/// Maximum clique size (or weight) together with a clique attaining it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CliqueResult {
    pub value: u64,
    pub witness: VertexSet,
}

/// `ω(G)` with a witness clique.
pub fn clique_number(g: &Graph) -> CliqueResult {
    clique_number_within(g, &g.vertices())
}

/// `ω(G[s])`, witness given in host ids.
pub fn clique_number_within(g: &Graph, s: &VertexSet) -> CliqueResult {
    search(g, s, &|_| 1)
}

/// Maximum total weight of a clique. The empty clique counts, so the result
/// is 0 when all weights vanish.
pub fn max_weight_clique(g: &Graph, w: &WeightFn) -> Result<CliqueResult, GraphError> {
    w.check(g)?;
    Ok(max_weight_clique_within(g, &g.vertices(), w))
}

pub fn max_weight_clique_within(g: &Graph, s: &VertexSet, w: &WeightFn) -> CliqueResult {
    search(g, s, &|v| w.get(v))
}

fn search(g: &Graph, s: &VertexSet, weight: &dyn Fn(usize) -> u64) -> CliqueResult {
    let mut best = CliqueResult {
        value: 0,
        witness: VertexSet::empty(g.order()),
    };
    let mut current = VertexSet::empty(g.order());
    expand(g, s.clone(), &mut current, 0, weight, &mut best);
    best
}

/// Greedy colour classes of `cand`; returns vertices ordered by class with the
/// running sum of per-class maximum weights.
fn colour_order(g: &Graph, cand: &VertexSet, weight: &dyn Fn(usize) -> u64) -> Vec<(usize, u64)> {
    let mut order = Vec::with_capacity(cand.len());
    let mut uncoloured = cand.clone();
    let mut bound = 0;
    while !uncoloured.is_empty() {
        let mut available = uncoloured.clone();
        let mut class = Vec::new();
        let mut class_max = 0;
        while let Some(v) = available.first() {
            available.remove(v);
            available.difference_with(g.adj(v));
            uncoloured.remove(v);
            class_max = class_max.max(weight(v));
            class.push(v);
        }
        bound += class_max;
        order.extend(class.into_iter().map(|v| (v, bound)));
    }
    order
}

fn expand(
    g: &Graph,
    mut cand: VertexSet,
    current: &mut VertexSet,
    current_weight: u64,
    weight: &dyn Fn(usize) -> u64,
    best: &mut CliqueResult,
) {
    let order = colour_order(g, &cand, weight);
    for &(v, bound) in order.iter().rev() {
        if current_weight + bound <= best.value {
            return;
        }
        cand.remove(v);
        let w = current_weight + weight(v);
        current.insert(v);
        if w > best.value {
            best.value = w;
            best.witness = current.clone();
        }
        let next = cand.intersection(g.adj(v));
        if !next.is_empty() {
            expand(g, next, current, w, weight, best);
        }
        current.remove(v);
    }
}
