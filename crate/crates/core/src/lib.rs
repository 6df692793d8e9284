//! Constructive divisibility for hereditary graph classes.
//!
//! Two division procedures sit at the centre of the crate:
//!
//! * [`divisibility::two_divide`] splits a (P5, C5)-free graph into two parts
//!   whose clique numbers are both strictly smaller than the graph's.
//! * [`divisibility::perfect_divide`] splits a bull-free graph that is
//!   odd-hole-free or P5-free into a perfect part and a part whose maximum
//!   weight clique is strictly lighter, recursing through homogeneous sets.
//!
//! Recursing on either yields colourings with at most `2^(ω-1)` and
//! `C(ω+1, 2)` colours respectively ([`coloring`]). Every answer is checked
//! against exact exponential oracles before it is returned, so the crate is
//! meant for desk-scale instances.

#[cfg(doctest)]
#[doc = include_str!("../../../README.md")]
struct ReadmeDoctests;

pub mod budget;
pub mod canon;
pub mod chromatic;
pub mod clique;
pub mod coloring;
pub mod corpus;
pub mod divisibility;
pub mod error;
pub mod exec;
pub mod graph;
pub mod harness;
pub mod io;
pub mod recognition;
pub mod seagull;
pub mod set;
pub mod weight;

pub use budget::Budget;
pub use error::{BudgetExceeded, GraphError};
pub use graph::Graph;
pub use set::VertexSet;
pub use weight::WeightFn;
