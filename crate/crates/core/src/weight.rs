use serde::{Serialize, Serializer};

use crate::error::GraphError;
use crate::graph::Graph;
use crate::set::VertexSet;

/// Non-negative integer weight per vertex of a host graph.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct WeightFn {
    weights: Vec<u64>,
}

impl WeightFn {
    pub fn new(g: &Graph, weights: Vec<u64>) -> Result<Self, GraphError> {
        if weights.len() != g.order() {
            return Err(GraphError::WeightLength {
                expected: g.order(),
                found: weights.len(),
            });
        }
        Ok(WeightFn { weights })
    }

    pub fn unit(n: usize) -> Self {
        WeightFn {
            weights: vec![1; n],
        }
    }

    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }

    #[inline]
    pub fn get(&self, v: usize) -> u64 {
        self.weights[v]
    }

    pub fn as_slice(&self) -> &[u64] {
        &self.weights
    }

    pub fn total(&self, s: &VertexSet) -> u64 {
        s.iter().map(|v| self.weights[v]).sum()
    }

    /// `U = { v : w(v) > 0 }`.
    pub fn support(&self) -> VertexSet {
        VertexSet::from_members(self.len(), (0..self.len()).filter(|&v| self.weights[v] > 0))
    }

    pub(crate) fn with_override(&self, v: usize, value: u64) -> Self {
        let mut weights = self.weights.clone();
        weights[v] = value;
        WeightFn { weights }
    }

    pub(crate) fn check(&self, g: &Graph) -> Result<(), GraphError> {
        if self.len() == g.order() {
            Ok(())
        } else {
            Err(GraphError::WeightLength {
                expected: g.order(),
                found: self.len(),
            })
        }
    }
}

impl Serialize for WeightFn {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.weights.serialize(serializer)
    }
}
