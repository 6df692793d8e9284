//! Extraction of an induced path `v - a - b` from a vertex mixed on a
//! connected set.

use thiserror::Error;

use crate::error::GraphError;
use crate::graph::Graph;
use crate::set::VertexSet;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SeagullError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("vertex {0} lies inside the set")]
    VertexInSet(usize),
    #[error("the set is empty")]
    EmptySet,
    #[error("the set is not connected")]
    NotConnected,
    #[error("vertex is complete to the set")]
    Complete,
    #[error("vertex is anticomplete to the set")]
    Anticomplete,
}

/// Given `c` connected and `v ∉ c` with both a neighbour and a non-neighbour
/// in `c`, returns `(a, b)` in `c` with `v ~ a`, `a ~ b` and `v ≁ b`.
///
/// With `in_complement` every adjacency above is read in the complement of
/// `g`. Among valid answers the lexicographically smallest `(a, b)` is chosen.
pub fn seagull(
    g: &Graph,
    c: &VertexSet,
    v: usize,
    in_complement: bool,
) -> Result<(usize, usize), SeagullError> {
    g.check_set(c)?;
    g.neighbors(v)?;
    if c.contains(v) {
        return Err(SeagullError::VertexInSet(v));
    }
    if c.is_empty() {
        return Err(SeagullError::EmptySet);
    }
    let parts = if in_complement {
        g.anticomponents(c)?
    } else {
        g.components(c)?
    };
    if parts.len() != 1 {
        return Err(SeagullError::NotConnected);
    }
    let adjacent = |x: usize, y: usize| x != y && (g.is_adjacent(x, y) != in_complement);
    let near: Vec<usize> = c.iter().filter(|&a| adjacent(v, a)).collect();
    let far: Vec<usize> = c.iter().filter(|&b| !adjacent(v, b)).collect();
    if far.is_empty() {
        return Err(SeagullError::Complete);
    }
    if near.is_empty() {
        return Err(SeagullError::Anticomplete);
    }
    for &a in &near {
        if let Some(&b) = far.iter().find(|&&b| adjacent(a, b)) {
            return Ok((a, b));
        }
    }
    unreachable!("a connected set mixed by v always has an edge between its two sides")
}
