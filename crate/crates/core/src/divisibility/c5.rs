//! How a vertex outside an induced C5 attaches to it.
//!
//! Positions are 0-based indices into the C5 embedding `c_0 .. c_4`, with
//! `c_i` adjacent to `c_{i±1}` (indices mod 5).

use serde::Serialize;
use thiserror::Error;

use crate::graph::Graph;
use crate::recognition::{Embedding, PatternKind};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", content = "detail", rename_all = "kebab-case")]
pub enum C5Relation {
    /// Adjacent to `c_{i-1}` and `c_{i+1}`, not to `c_{i-2}` or `c_{i+2}`.
    Clone(usize),
    /// Adjacent to every `c_j` except `c_i`.
    Star(usize),
    Center,
    Anticenter,
    /// None of the above; the embedding is an induced P5 or bull through the vertex.
    Violation(Embedding),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum C5Error {
    #[error("not an induced C5 of the graph")]
    NotAHole,
    #[error("vertex {0} is on the C5 or out of range")]
    BadVertex(usize),
}

fn check(g: &Graph, c: &Embedding, v: usize) -> Result<(), C5Error> {
    if c.pattern != PatternKind::C5 || !c.is_valid_in(g) {
        return Err(C5Error::NotAHole);
    }
    if v >= g.order() || c.vertices.contains(&v) {
        return Err(C5Error::BadVertex(v));
    }
    Ok(())
}

pub fn classify_against_c5(g: &Graph, c: &Embedding, v: usize) -> Result<C5Relation, C5Error> {
    check(g, c, v)?;
    let at = |i: usize| c.vertices[i % 5];
    let near: Vec<bool> = (0..5).map(|i| g.is_adjacent(v, at(i))).collect();
    let is_near = |i: usize| near[i % 5];
    let count = near.iter().filter(|&&b| b).count();
    let p5 = |vertices: Vec<usize>| {
        C5Relation::Violation(Embedding {
            pattern: PatternKind::P5,
            vertices,
        })
    };
    let bull = |vertices: Vec<usize>| {
        C5Relation::Violation(Embedding {
            pattern: PatternKind::Bull,
            vertices,
        })
    };
    let relation = match count {
        0 => C5Relation::Anticenter,
        5 => C5Relation::Center,
        4 => C5Relation::Star((0..5).find(|&i| !is_near(i)).expect("one non-neighbour")),
        1 => {
            let i = (0..5).find(|&i| is_near(i)).expect("one neighbour");
            p5(vec![v, at(i), at(i + 1), at(i + 2), at(i + 3)])
        }
        2 => {
            if let Some(i) = (0..5).find(|&i| is_near(i + 4) && is_near(i + 1)) {
                C5Relation::Clone(i)
            } else {
                // Neighbours c_i, c_{i+1} are adjacent: triangle with pendants.
                let i = (0..5)
                    .find(|&i| is_near(i) && is_near(i + 1))
                    .expect("adjacent pair");
                bull(vec![at(i + 4), at(i), at(i + 1), v, at(i + 2)])
            }
        }
        _ => {
            // Three neighbours; the two non-neighbours are c_j and c_{j+1} or c_j and c_{j+2}.
            if let Some(j) = (0..5).find(|&j| !is_near(j) && !is_near(j + 1)) {
                C5Relation::Clone((j + 3) % 5)
            } else {
                let j = (0..5)
                    .find(|&j| !is_near(j) && !is_near(j + 2))
                    .expect("split non-neighbours");
                bull(vec![at(j + 2), at(j + 3), at(j + 4), v, at(j)])
            }
        }
    };
    Ok(relation)
}

/// Some `i` with `N[c_i] ∪ N[c_{i+2}] = V(G)`.
pub fn dominating_pair(g: &Graph, c: &Embedding) -> Result<Option<usize>, C5Error> {
    if c.pattern != PatternKind::C5 || !c.is_valid_in(g) {
        return Err(C5Error::NotAHole);
    }
    let all = g.vertices();
    Ok((0..5).find(|&i| {
        let a = c.vertices[i];
        let b = c.vertices[(i + 2) % 5];
        g.adj(a).with(a).union(&g.adj(b).with(b)) == all
    }))
}
