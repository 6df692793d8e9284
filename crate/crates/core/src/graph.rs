//! Simple undirected graphs on dense vertex identifiers `0..n`.

use std::fmt;

use crate::error::GraphError;
use crate::set::VertexSet;

/// Immutable simple graph: symmetric, irreflexive adjacency over `0..n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<VertexSet>,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Graph {
            n,
            adj: vec![VertexSet::empty(n); n],
        }
    }

    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Self::empty(n);
        for (u, v) in edges {
            for x in [u, v] {
                if x >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: x, n });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            g.add_edge(u, v);
        }
        Ok(g)
    }

    /// Builds a graph from an adjacency predicate evaluated on each pair `u < v`.
    pub fn from_fn(n: usize, mut adjacent: impl FnMut(usize, usize) -> bool) -> Self {
        let mut g = Self::empty(n);
        for v in 1..n {
            for u in 0..v {
                if adjacent(u, v) {
                    g.add_edge(u, v);
                }
            }
        }
        g
    }

    pub(crate) fn add_edge(&mut self, u: usize, v: usize) {
        debug_assert_ne!(u, v);
        self.adj[u].insert(v);
        self.adj[v].insert(u);
    }

    /// Vertex count.
    pub fn order(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(VertexSet::len).sum::<usize>() / 2
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    /// Edges as `(u, v)` with `u < v`, in row-major order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| {
            self.adj[u]
                .iter()
                .filter(move |&v| v > u)
                .map(move |v| (u, v))
        })
    }

    #[inline]
    pub fn is_adjacent(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    /// Neighborhood row of `v`. Panics when `v` is out of range; see
    /// [`Graph::neighbors`] for the checked variant.
    #[inline]
    pub fn adj(&self, v: usize) -> &VertexSet {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    fn check_vertex(&self, v: usize) -> Result<(), GraphError> {
        if v < self.n {
            Ok(())
        } else {
            Err(GraphError::VertexOutOfRange {
                vertex: v,
                n: self.n,
            })
        }
    }

    pub(crate) fn check_set(&self, s: &VertexSet) -> Result<(), GraphError> {
        if s.host_size() == self.n {
            Ok(())
        } else {
            Err(GraphError::HostMismatch {
                expected: self.n,
                found: s.host_size(),
            })
        }
    }

    /// `N(v)`.
    pub fn neighbors(&self, v: usize) -> Result<VertexSet, GraphError> {
        self.check_vertex(v)?;
        Ok(self.adj[v].clone())
    }

    /// `N[v] = N(v) + v`.
    pub fn closed_neighborhood(&self, v: usize) -> Result<VertexSet, GraphError> {
        self.check_vertex(v)?;
        Ok(self.adj[v].with(v))
    }

    /// `M(v) = V \ N[v]`.
    pub fn non_neighborhood(&self, v: usize) -> Result<VertexSet, GraphError> {
        self.check_vertex(v)?;
        Ok(self.adj[v].with(v).complement())
    }

    pub fn complement(&self) -> Graph {
        let adj = (0..self.n)
            .map(|v| self.adj[v].with(v).complement())
            .collect();
        Graph { n: self.n, adj }
    }

    /// `G[s]`, relabelled to `0..|s|` in increasing order of the original ids.
    /// The returned map sends each new vertex to its original id.
    pub fn induced_subgraph(&self, s: &VertexSet) -> Result<(Graph, Vec<usize>), GraphError> {
        self.check_set(s)?;
        let map = s.to_vec();
        let h = Graph::from_fn(map.len(), |i, j| self.is_adjacent(map[i], map[j]));
        Ok((h, map))
    }

    /// Whether every pair in `s` is adjacent.
    pub fn is_clique(&self, s: &VertexSet) -> bool {
        s.iter().all(|v| s.without(v).is_subset(&self.adj[v]))
    }

    pub fn is_stable(&self, s: &VertexSet) -> bool {
        s.iter().all(|v| self.adj[v].is_disjoint(s))
    }

    /// Vertices of `within` reachable from `start` inside `within`.
    pub(crate) fn reach(&self, start: usize, within: &VertexSet) -> VertexSet {
        let mut seen = VertexSet::singleton(self.n, start);
        let mut frontier = seen.clone();
        while !frontier.is_empty() {
            let mut next = VertexSet::empty(self.n);
            for u in &frontier {
                next.union_with(&self.adj[u]);
            }
            next.intersect_with(within);
            next.difference_with(&seen);
            seen.union_with(&next);
            frontier = next;
        }
        seen
    }

    /// Components of `G[x]`, ordered by smallest member.
    pub fn components(&self, x: &VertexSet) -> Result<Vec<VertexSet>, GraphError> {
        self.check_set(x)?;
        let mut rest = x.clone();
        let mut out = Vec::new();
        while let Some(v) = rest.first() {
            let comp = self.reach(v, &rest);
            rest.difference_with(&comp);
            out.push(comp);
        }
        Ok(out)
    }

    /// Components of `x` in the complement, ordered by smallest member.
    pub fn anticomponents(&self, x: &VertexSet) -> Result<Vec<VertexSet>, GraphError> {
        self.check_set(x)?;
        let mut rest = x.clone();
        let mut out = Vec::new();
        while let Some(v) = rest.first() {
            // BFS over non-edges without materialising the complement.
            let mut comp = VertexSet::singleton(self.n, v);
            let mut frontier = comp.clone();
            while !frontier.is_empty() {
                let mut next = VertexSet::empty(self.n);
                for u in &frontier {
                    let mut non = self.adj[u].complement();
                    non.remove(u);
                    next.union_with(&non);
                }
                next.intersect_with(&rest);
                next.difference_with(&comp);
                comp.union_with(&next);
                frontier = next;
            }
            rest.difference_with(&comp);
            out.push(comp);
        }
        Ok(out)
    }

    pub fn is_connected_set(&self, x: &VertexSet) -> bool {
        match x.first() {
            None => true,
            Some(v) => self.reach(v, x) == *x,
        }
    }

    pub fn is_connected(&self) -> bool {
        self.is_connected_set(&self.vertices())
    }

    fn check_disjoint(&self, x: &VertexSet, y: &VertexSet) -> Result<(), GraphError> {
        self.check_set(x)?;
        self.check_set(y)?;
        match x.intersection(y).first() {
            Some(v) => Err(GraphError::Overlapping(v)),
            None => Ok(()),
        }
    }

    /// Every vertex of `x` is adjacent to every vertex of `y`.
    pub fn is_complete_to(&self, x: &VertexSet, y: &VertexSet) -> Result<bool, GraphError> {
        self.check_disjoint(x, y)?;
        Ok(x.iter().all(|u| y.is_subset(&self.adj[u])))
    }

    /// No vertex of `x` is adjacent to any vertex of `y`.
    pub fn is_anticomplete_to(&self, x: &VertexSet, y: &VertexSet) -> Result<bool, GraphError> {
        self.check_disjoint(x, y)?;
        Ok(x.iter().all(|u| y.is_disjoint(&self.adj[u])))
    }

    /// Disjoint union; vertices of `other` are shifted by `self.order()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let n = self.n + other.n;
        let off = self.n;
        Graph::from_fn(n, |u, v| {
            if v < off {
                self.is_adjacent(u, v)
            } else if u >= off {
                other.is_adjacent(u - off, v - off)
            } else {
                false
            }
        })
    }

    /// Replaces vertex `v` by two twins: the copy gets id `n` and the same
    /// neighborhood as `v`; `adjacent_twins` decides whether the pair is an edge.
    pub fn with_twin(&self, v: usize, adjacent_twins: bool) -> Result<Graph, GraphError> {
        self.check_vertex(v)?;
        let n = self.n;
        Ok(Graph::from_fn(n + 1, |a, b| {
            if b < n {
                self.is_adjacent(a, b)
            } else if a == v {
                adjacent_twins
            } else {
                self.is_adjacent(a, v)
            }
        }))
    }

    /// Relabels so that new vertex `i` is old vertex `order[i]`.
    pub fn permuted(&self, order: &[usize]) -> Graph {
        assert_eq!(order.len(), self.n);
        Graph::from_fn(self.n, |i, j| self.is_adjacent(order[i], order[j]))
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges=", self.n)?;
        f.debug_list().entries(self.edges()).finish()?;
        write!(f, ")")
    }
}

/// Named small graphs used as patterns and fixtures.
pub mod families {
    use super::Graph;

    pub fn path(k: usize) -> Graph {
        Graph::from_fn(k, |u, v| v == u + 1)
    }

    /// `c_0 - c_1 - ... - c_{k-1} - c_0`. Needs `k >= 3`.
    pub fn cycle(k: usize) -> Graph {
        assert!(k >= 3, "cycle needs at least 3 vertices");
        Graph::from_fn(k, |u, v| v == u + 1 || (u == 0 && v == k - 1))
    }

    pub fn complete(k: usize) -> Graph {
        Graph::from_fn(k, |_, _| true)
    }

    pub fn antihole(k: usize) -> Graph {
        cycle(k).complement()
    }

    /// Triangle `a b c` with pendants `x - a` and `y - b`, labelled
    /// `x = 0, a = 1, b = 2, c = 3, y = 4`.
    pub fn bull() -> Graph {
        Graph::from_edges(5, [(0, 1), (1, 2), (1, 3), (2, 3), (2, 4)]).expect("static edges")
    }

    /// Outer 5-cycle `0..5`, inner pentagram `5..10`, spokes `i - i+5`.
    pub fn petersen() -> Graph {
        let mut edges = Vec::new();
        for i in 0..5 {
            edges.push((i, (i + 1) % 5));
            edges.push((i, i + 5));
            edges.push((i + 5, (i + 2) % 5 + 5));
        }
        Graph::from_edges(10, edges).expect("static edges")
    }

    pub fn complete_bipartite(a: usize, b: usize) -> Graph {
        Graph::from_fn(a + b, |u, v| (u < a) != (v < a))
    }
}

#[cfg(test)]
mod tests {
    use super::families::*;
    use super::*;

    fn set(n: usize, m: &[usize]) -> VertexSet {
        VertexSet::from_members(n, m.iter().copied())
    }

    #[test]
    fn complement_examples() {
        assert_eq!(complete(3).complement(), Graph::empty(3));
        let c5c = cycle(5).complement();
        for i in 0..5 {
            assert!(c5c.is_adjacent(i, (i + 2) % 5));
            assert!(!c5c.is_adjacent(i, (i + 1) % 5));
        }
        assert_eq!(path(4).complement().complement(), path(4));
    }

    #[test]
    fn induced_subgraph_examples() {
        let (h, map) = cycle(5).induced_subgraph(&set(5, &[0, 1, 2])).unwrap();
        assert_eq!(h, path(3));
        assert_eq!(map, vec![0, 1, 2]);

        let g = petersen();
        let (h, _) = g.induced_subgraph(&g.vertices()).unwrap();
        assert_eq!(h, g);

        // x - a - b - y in the bull.
        let (h, _) = bull().induced_subgraph(&set(5, &[0, 1, 2, 4])).unwrap();
        assert_eq!(h, path(4));

        assert_eq!(
            cycle(5).induced_subgraph(&VertexSet::empty(4)).unwrap_err(),
            GraphError::HostMismatch {
                expected: 5,
                found: 4
            }
        );
    }

    #[test]
    fn neighborhood_examples() {
        let c5 = cycle(5);
        assert_eq!(c5.neighbors(0).unwrap().to_vec(), vec![1, 4]);
        assert_eq!(complete(4).neighbors(2).unwrap().to_vec(), vec![0, 1, 3]);
        assert!(Graph::empty(3).neighbors(1).unwrap().is_empty());
        assert_eq!(c5.non_neighborhood(0).unwrap().to_vec(), vec![2, 3]);
        assert!(complete(4).non_neighborhood(0).unwrap().is_empty());
        assert_eq!(bull().non_neighborhood(0).unwrap().to_vec(), vec![2, 3, 4]);
        assert_eq!(
            c5.neighbors(5).unwrap_err(),
            GraphError::VertexOutOfRange { vertex: 5, n: 5 }
        );
        assert!(c5.non_neighborhood(7).is_err());
    }

    #[test]
    fn component_examples() {
        let c5 = cycle(5);
        assert_eq!(
            c5.components(&set(5, &[0, 1, 3])).unwrap(),
            vec![set(5, &[0, 1]), set(5, &[3])]
        );
        assert!(c5.components(&VertexSet::empty(5)).unwrap().is_empty());
        assert_eq!(
            bull().components(&set(5, &[2, 3, 4])).unwrap(),
            vec![set(5, &[2, 3, 4])]
        );

        let k4 = complete(4);
        assert_eq!(
            k4.anticomponents(&k4.vertices()).unwrap(),
            (0..4).map(|v| set(4, &[v])).collect::<Vec<_>>()
        );
        let e3 = Graph::empty(3);
        assert_eq!(
            e3.anticomponents(&e3.vertices()).unwrap(),
            vec![e3.vertices()]
        );
        assert_eq!(
            c5.anticomponents(&set(5, &[0, 1, 2])).unwrap(),
            vec![set(5, &[0, 2]), set(5, &[1])]
        );
    }

    #[test]
    fn complete_and_anticomplete() {
        let k4 = complete(4);
        assert!(k4.is_complete_to(&set(4, &[0]), &set(4, &[1, 2])).unwrap());
        let c5 = cycle(5);
        assert!(c5
            .is_anticomplete_to(&set(5, &[0]), &set(5, &[2, 3]))
            .unwrap());
        assert!(!c5.is_complete_to(&set(5, &[0]), &set(5, &[1, 2])).unwrap());
        assert!(c5
            .is_complete_to(&VertexSet::empty(5), &set(5, &[1]))
            .unwrap());
        assert_eq!(
            c5.is_complete_to(&set(5, &[0, 1]), &set(5, &[1, 2]))
                .unwrap_err(),
            GraphError::Overlapping(1)
        );
    }

    #[test]
    fn edge_validation() {
        assert_eq!(
            Graph::from_edges(3, [(0, 3)]).unwrap_err(),
            GraphError::VertexOutOfRange { vertex: 3, n: 3 }
        );
        assert_eq!(
            Graph::from_edges(3, [(1, 1)]).unwrap_err(),
            GraphError::SelfLoop(1)
        );
    }

    #[test]
    fn petersen_is_cubic() {
        let g = petersen();
        assert_eq!(g.edge_count(), 15);
        assert!((0..10).all(|v| g.degree(v) == 3));
    }

    #[test]
    fn twin_substitution() {
        let g = cycle(5).with_twin(0, true).unwrap();
        assert_eq!(g.order(), 6);
        assert!(g.is_adjacent(0, 5));
        assert!(g.is_adjacent(5, 1) && g.is_adjacent(5, 4) && !g.is_adjacent(5, 2));
    }
}
