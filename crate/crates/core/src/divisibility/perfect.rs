//! Perfect (weight) division of bull-free graphs that are odd-hole-free or
//! P5-free.
//!
//! Work happens on vertex subsets of the host graph so every id in a
//! division or log entry is a host id. Zero-weight vertices are moved to the
//! `W` side up front. If the remaining support has a homogeneous set `X`, it
//! is shrunk to its smallest vertex carrying the maximum clique weight of
//! `G[X]`; the quotient and `G[X]` are divided recursively and recombined.
//! Otherwise some vertex `v` has a perfect non-neighbourhood and
//! `(M(v) + v, N(v))` divides the support.

use crate::budget::Budget;
use crate::clique::max_weight_clique_within;
use crate::error::BudgetExceeded;
use crate::graph::Graph;
use crate::recognition::{
    find_bull, find_homogeneous_set, find_odd_hole_with, find_p5, is_homogeneous, is_perfect_within,
};
use crate::set::VertexSet;
use crate::weight::WeightFn;

use super::verify::verify_perfect_division_within;
use super::{
    lift_set, DerivationLog, DerivationStep, Derived, DivisionError, PartitionRule,
    PerfectDivision, RepresentativeSide,
};

/// Replacement of a homogeneous set `x` by its smallest vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuotientStep {
    /// Vertex set of the graph being quotiented.
    pub domain: VertexSet,
    pub x: VertexSet,
    pub representative: usize,
    /// `(domain \ x) + representative`.
    pub quotient_vertices: VertexSet,
    pub weights: WeightFn,
    /// `weights` with the representative raised to the maximum clique
    /// weight of `G[x]`.
    pub lifted_weights: WeightFn,
}

impl QuotientStep {
    pub fn lifted_weight(&self) -> u64 {
        self.lifted_weights.get(self.representative)
    }

    /// The quotient as a standalone graph on `0..k`, with the map back to
    /// host ids. It is the induced subgraph on `quotient_vertices`.
    pub fn quotient_graph(&self, g: &Graph) -> (Graph, Vec<usize>) {
        g.induced_subgraph(&self.quotient_vertices)
            .expect("same host")
    }

    /// Vertices of the domain complete to `x`.
    pub fn common_neighbors(&self, g: &Graph) -> VertexSet {
        let mut out = self.domain.difference(&self.x);
        for v in &self.x {
            out.intersect_with(g.adj(v));
        }
        out
    }
}

/// Builds the quotient of `g` by the homogeneous set `x` under weights `w`.
pub fn quotient_by_homogeneous_set(
    g: &Graph,
    w: &WeightFn,
    x: &VertexSet,
) -> Result<QuotientStep, DivisionError> {
    w.check(g)?;
    g.check_set(x)?;
    if !is_homogeneous(g, x) {
        return Err(DivisionError::NotHomogeneous);
    }
    Ok(quotient_within(g, &g.vertices(), w, x))
}

fn quotient_within(g: &Graph, domain: &VertexSet, w: &WeightFn, x: &VertexSet) -> QuotientStep {
    let representative = x
        .first()
        .expect("homogeneous sets have at least two vertices");
    let lifted = max_weight_clique_within(g, x, w).value;
    QuotientStep {
        domain: domain.clone(),
        x: x.clone(),
        representative,
        quotient_vertices: domain.difference(x).with(representative),
        weights: w.clone(),
        lifted_weights: w.with_override(representative, lifted),
    }
}

/// Pure set algebra of recombination; see [`recombine`].
fn combine(
    step: &QuotientStep,
    outer: &PerfectDivision,
    inner: &PerfectDivision,
) -> (PerfectDivision, RepresentativeSide) {
    let rep = step.representative;
    if outer.w_side.contains(rep) {
        let w_side = outer.w_side.without(rep).union(&step.x);
        let p = outer.p.clone();
        (
            PerfectDivision {
                p,
                w_side,
                weights: None,
            },
            RepresentativeSide::W,
        )
    } else {
        let p = outer.p.without(rep).union(&inner.p);
        let w_side = outer.w_side.union(&inner.w_side);
        (
            PerfectDivision {
                p,
                w_side,
                weights: None,
            },
            RepresentativeSide::P,
        )
    }
}

/// Lifts a division of the quotient and a division of `G[x]` to a division
/// of the quotient step's domain, then re-verifies it.
///
/// If the representative landed in `W'` the whole of `x` joins `W`;
/// otherwise the representative is replaced by `x`'s own perfect side and
/// `x`'s `W` side joins `W'`.
pub fn recombine(
    g: &Graph,
    step: &QuotientStep,
    quotient_division: &PerfectDivision,
    inner_division: &PerfectDivision,
) -> Result<PerfectDivision, DivisionError> {
    if quotient_division.p.union(&quotient_division.w_side) != step.quotient_vertices
        || quotient_division.p.intersects(&quotient_division.w_side)
    {
        return Err(DivisionError::MismatchedInputs(
            "quotient division does not partition the quotient",
        ));
    }
    if inner_division.p.union(&inner_division.w_side) != step.x
        || inner_division.p.intersects(&inner_division.w_side)
    {
        return Err(DivisionError::MismatchedInputs(
            "inner division does not partition the homogeneous set",
        ));
    }
    let (mut division, side) = combine(step, quotient_division, inner_division);
    division.weights = Some(step.weights.clone());
    if let Err(violation) = verify_perfect_division_within(
        g,
        &step.domain,
        &step.weights,
        &division,
        &Budget::default(),
    ) {
        let mut log = DerivationLog::default();
        log.push(
            0,
            DerivationStep::Recombination {
                representative_in: side,
                p: division.p.clone(),
                w_side: division.w_side.clone(),
            },
        );
        return Err(DivisionError::InternalTheoremViolation {
            reason: format!("recombined division failed verification: {violation}"),
            log,
        });
    }
    Ok(division)
}

/// Smallest `v` for which `G[M(v)]` is perfect.
pub fn find_perfect_nonneighborhood_vertex(g: &Graph) -> Result<Option<usize>, BudgetExceeded> {
    first_perfect_nonneighborhood(g, &g.vertices(), &Budget::default())
}

fn first_perfect_nonneighborhood(
    g: &Graph,
    s: &VertexSet,
    budget: &Budget,
) -> Result<Option<usize>, BudgetExceeded> {
    for v in s {
        let mut m = s.difference(g.adj(v));
        m.remove(v);
        if is_perfect_within(g, &m, budget)? {
            return Ok(Some(v));
        }
    }
    Ok(None)
}

pub(crate) fn require_class(g: &Graph, budget: &Budget) -> Result<(), DivisionError> {
    if let Some(bull) = find_bull(g) {
        return Err(DivisionError::NotInClass {
            requirement: "bull-free",
            witnesses: vec![bull],
        });
    }
    if let Some(hole) = find_odd_hole_with(g, budget)? {
        if let Some(p5) = find_p5(g) {
            return Err(DivisionError::NotInClass {
                requirement: "odd-hole-free or P5-free",
                witnesses: vec![hole, p5],
            });
        }
    }
    Ok(())
}

/// Unweighted perfect division: unit weights, `weights` left empty.
pub fn perfect_divide_unit(g: &Graph) -> Result<Derived<PerfectDivision>, DivisionError> {
    let mut out = perfect_divide(g, &WeightFn::unit(g.order()))?;
    out.division.weights = None;
    Ok(out)
}

pub fn perfect_divide(g: &Graph, w: &WeightFn) -> Result<Derived<PerfectDivision>, DivisionError> {
    perfect_divide_with(g, w, &Budget::default())
}

pub fn perfect_divide_with(
    g: &Graph,
    w: &WeightFn,
    budget: &Budget,
) -> Result<Derived<PerfectDivision>, DivisionError> {
    w.check(g)?;
    require_class(g, budget)?;
    let mut log = DerivationLog::default();
    let mut division = divide(g, &g.vertices(), w, budget, &mut log, 0)?;
    division.weights = Some(w.clone());
    Ok(Derived { division, log })
}

pub(crate) fn divide(
    g: &Graph,
    domain: &VertexSet,
    w: &WeightFn,
    budget: &Budget,
    log: &mut DerivationLog,
    depth: usize,
) -> Result<PerfectDivision, DivisionError> {
    let support = domain.intersection(&w.support());
    if support != *domain {
        log.push(
            depth,
            DerivationStep::Restrict {
                support: support.clone(),
            },
        );
    }
    let zero = domain.difference(&support);
    let n = g.order();

    let on_support = if support.is_empty() {
        log.push(
            depth,
            DerivationStep::BasePartition {
                rule: PartitionRule::EmptySupport,
                first: VertexSet::empty(n),
                second: domain.clone(),
            },
        );
        PerfectDivision {
            p: VertexSet::empty(n),
            w_side: VertexSet::empty(n),
            weights: None,
        }
    } else {
        let (h, map) = g.induced_subgraph(&support)?;
        match find_homogeneous_set(&h) {
            Some(local) => {
                let x = lift_set(&local, &map, n);
                let step = quotient_within(g, &support, w, &x);
                log.push(
                    depth,
                    DerivationStep::Quotient {
                        set: x.clone(),
                        representative: step.representative,
                        lifted_weight: step.lifted_weight(),
                    },
                );
                let outer = divide(
                    g,
                    &step.quotient_vertices,
                    &step.lifted_weights,
                    budget,
                    log,
                    depth + 1,
                )?;
                let inner = divide(g, &x, w, budget, log, depth + 1)?;
                let (division, side) = combine(&step, &outer, &inner);
                log.push(
                    depth,
                    DerivationStep::Recombination {
                        representative_in: side,
                        p: division.p.clone(),
                        w_side: division.w_side.clone(),
                    },
                );
                division
            }
            None => {
                let Some(v) = first_perfect_nonneighborhood(g, &support, budget)? else {
                    return Err(DivisionError::InternalTheoremViolation {
                        reason: format!("prime support {support:?} has no vertex with a perfect non-neighbourhood"),
                        log: log.clone(),
                    });
                };
                log.push(
                    depth,
                    DerivationStep::VertexChoice {
                        role: "perfect-non-neighbourhood",
                        candidates: support.clone(),
                        chosen: v,
                    },
                );
                let nbrs = g.adj(v).intersection(&support);
                let p = support.difference(&nbrs);
                log.push(
                    depth,
                    DerivationStep::BasePartition {
                        rule: PartitionRule::PerfectNonNeighborhood,
                        first: p.clone(),
                        second: nbrs.clone(),
                    },
                );
                PerfectDivision {
                    p,
                    w_side: nbrs,
                    weights: None,
                }
            }
        }
    };

    let division = PerfectDivision {
        p: on_support.p,
        w_side: on_support.w_side.union(&zero),
        weights: None,
    };
    if let Err(violation) = verify_perfect_division_within(g, domain, w, &division, budget) {
        if let super::Violation::Budget(b) = violation {
            return Err(DivisionError::Budget(b));
        }
        return Err(DivisionError::InternalTheoremViolation {
            reason: format!("perfect division of {domain:?} failed verification: {violation}"),
            log: log.clone(),
        });
    }
    Ok(division)
}
