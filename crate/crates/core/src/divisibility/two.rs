//! 2-division of (P5, C5)-free graphs.
//!
//! For a connected graph pick the smallest vertex `v`, with `N = N(v)` and
//! `M = M(v)`. If every component of `M` has a vertex of `N` complete to it,
//! `(M + v, N)` divides. Otherwise take the first component `C` with no such
//! vertex, let `n` be the vertex of `N` with a neighbour in `C` and the most
//! neighbours in `M`, and return `(N(n), rest)`. Disconnected graphs are
//! divided component by component.

use serde::Serialize;

use crate::clique::clique_number_within;
use crate::graph::Graph;
use crate::recognition::{find_c5, find_p5};
use crate::set::VertexSet;

use super::verify::verify_two_division_within;
use super::{
    lift_embedding, DerivationLog, DerivationStep, Derived, DivisionError, PartitionRule,
    TwoDivision,
};

/// Rejects graphs containing P5 or C5, naming every witness found.
fn require_p5_c5_free(g: &Graph, s: &VertexSet) -> Result<(), DivisionError> {
    let (h, map) = g.induced_subgraph(s)?;
    let witnesses: Vec<_> = [find_p5(&h), find_c5(&h)]
        .into_iter()
        .flatten()
        .map(|e| lift_embedding(e, &map))
        .collect();
    if witnesses.is_empty() {
        Ok(())
    } else {
        Err(DivisionError::NotInClass {
            requirement: "(P5, C5)-free",
            witnesses,
        })
    }
}

/// Divides `g` into two parts of strictly smaller clique number.
pub fn two_divide(g: &Graph) -> Result<Derived<TwoDivision>, DivisionError> {
    two_divide_with(g, &g.vertices())
}

/// Divides `G[s]`; the returned sides partition `s`.
pub fn two_divide_with(g: &Graph, s: &VertexSet) -> Result<Derived<TwoDivision>, DivisionError> {
    g.check_set(s)?;
    require_p5_c5_free(g, s)?;
    let mut log = DerivationLog::default();
    let division = divide_within(g, s, &mut log, 0)?;
    Ok(Derived { division, log })
}

pub(crate) fn divide_within(
    g: &Graph,
    s: &VertexSet,
    log: &mut DerivationLog,
    depth: usize,
) -> Result<TwoDivision, DivisionError> {
    let omega = clique_number_within(g, s).value;
    if omega <= 1 {
        return Err(DivisionError::DegenerateClique1 { omega });
    }
    let components = g.components(s)?;
    if components.len() > 1 {
        log.push(
            depth,
            DerivationStep::ComponentSplit {
                components: components.clone(),
            },
        );
    }
    let n = g.order();
    let mut a = VertexSet::empty(n);
    let mut b = VertexSet::empty(n);
    for comp in &components {
        if comp.len() == 1 {
            a.union_with(comp);
            continue;
        }
        let part = divide_connected(g, comp, log, depth)?;
        a.union_with(&part.a);
        b.union_with(&part.b);
    }
    let division = TwoDivision { a, b };
    if let Err(violation) = verify_two_division_within(g, s, &division) {
        return Err(DivisionError::InternalTheoremViolation {
            reason: format!("2-division of {s:?} failed verification: {violation}"),
            log: log.clone(),
        });
    }
    Ok(division)
}

fn divide_connected(
    g: &Graph,
    c: &VertexSet,
    log: &mut DerivationLog,
    depth: usize,
) -> Result<TwoDivision, DivisionError> {
    let v = c.first().expect("non-empty component");
    log.push(
        depth,
        DerivationStep::VertexChoice {
            role: "root",
            candidates: c.clone(),
            chosen: v,
        },
    );
    let nbrs = g.adj(v).intersection(c);
    let mut non = c.difference(&nbrs);
    non.remove(v);
    let parts = g.components(&non)?;
    let uncovered = parts
        .iter()
        .find(|part| !nbrs.iter().any(|u| part.is_subset(g.adj(u))));
    let Some(c1) = uncovered else {
        let division = TwoDivision {
            a: non.with(v),
            b: nbrs,
        };
        log.push(
            depth,
            DerivationStep::BasePartition {
                rule: PartitionRule::NonNeighborhoodPlusRoot,
                first: division.a.clone(),
                second: division.b.clone(),
            },
        );
        return Ok(division);
    };
    let candidates =
        VertexSet::from_members(g.order(), nbrs.iter().filter(|&u| g.adj(u).intersects(c1)));
    // max_by_key keeps the last maximum, so scan in reverse for the smallest id.
    let chosen = candidates
        .to_vec()
        .into_iter()
        .rev()
        .max_by_key(|&u| g.adj(u).intersection_len(&non))
        .ok_or_else(|| DivisionError::InternalTheoremViolation {
            reason: format!("no vertex of N({v}) has a neighbour in component {c1:?} of M({v})"),
            log: log.clone(),
        })?;
    log.push(
        depth,
        DerivationStep::VertexChoice {
            role: "max-neighbours-in-M",
            candidates,
            chosen,
        },
    );
    let a = g.adj(chosen).intersection(c);
    let b = c.difference(&a);
    log.push(
        depth,
        DerivationStep::BasePartition {
            rule: PartitionRule::NeighborhoodOfChosen,
            first: a.clone(),
            second: b.clone(),
        },
    );
    Ok(TwoDivision { a, b })
}

/// Node of a recursive 2-division: leaves have clique number at most 1.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DivisionNode {
    pub vertices: VertexSet,
    pub omega: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub children: Option<Box<(DivisionNode, DivisionNode)>>,
}

impl DivisionNode {
    /// Edges on the longest root-to-leaf path.
    pub fn depth(&self) -> usize {
        match &self.children {
            None => 0,
            Some(kids) => 1 + kids.0.depth().max(kids.1.depth()),
        }
    }

    /// Leaves from left (`A` side) to right.
    pub fn leaves(&self) -> Vec<&DivisionNode> {
        match &self.children {
            None => vec![self],
            Some(kids) => {
                let mut out = kids.0.leaves();
                out.extend(kids.1.leaves());
                out
            }
        }
    }
}

/// Divides `g`, then each side, until every part is a stable set.
pub fn two_divide_recursive(g: &Graph) -> Result<Derived<DivisionNode>, DivisionError> {
    let all = g.vertices();
    require_p5_c5_free(g, &all)?;
    let mut log = DerivationLog::default();
    let division = build(g, all, &mut log, 0)?;
    Ok(Derived { division, log })
}

fn build(
    g: &Graph,
    s: VertexSet,
    log: &mut DerivationLog,
    depth: usize,
) -> Result<DivisionNode, DivisionError> {
    let omega = clique_number_within(g, &s).value;
    if omega <= 1 {
        return Ok(DivisionNode {
            vertices: s,
            omega,
            children: None,
        });
    }
    let TwoDivision { a, b } = divide_within(g, &s, log, depth)?;
    let left = build(g, a, log, depth + 1)?;
    let right = build(g, b, log, depth + 1)?;
    Ok(DivisionNode {
        vertices: s,
        omega,
        children: Some(Box::new((left, right))),
    })
}
