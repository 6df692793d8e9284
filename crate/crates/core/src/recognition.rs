//! Forbidden induced subgraphs, perfection and homogeneous sets.

use std::fmt;

use serde::{Serialize, Serializer};

use crate::budget::{Budget, Ticker};
use crate::error::BudgetExceeded;
use crate::graph::{families, Graph};
use crate::set::VertexSet;

/// The fixed patterns searched for as induced subgraphs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PatternKind {
    P5,
    C5,
    Bull,
    /// Induced cycle of odd length `k >= 5`.
    OddHole(usize),
    /// Complement of an odd cycle of length `k >= 5`.
    OddAntihole(usize),
}

impl PatternKind {
    /// The pattern on `0..k`. Embedding slot `i` is the image of vertex `i`.
    pub fn graph(&self) -> Graph {
        match *self {
            PatternKind::P5 => families::path(5),
            PatternKind::C5 => families::cycle(5),
            PatternKind::Bull => families::bull(),
            PatternKind::OddHole(k) => families::cycle(k),
            PatternKind::OddAntihole(k) => families::antihole(k),
        }
    }
}

impl fmt::Display for PatternKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PatternKind::P5 => write!(f, "P5"),
            PatternKind::C5 => write!(f, "C5"),
            PatternKind::Bull => write!(f, "bull"),
            PatternKind::OddHole(k) => write!(f, "odd-hole({k})"),
            PatternKind::OddAntihole(k) => write!(f, "odd-antihole({k})"),
        }
    }
}

impl Serialize for PatternKind {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// An induced copy of a pattern: `vertices[i]` is the host vertex playing
/// pattern vertex `i`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct Embedding {
    pub pattern: PatternKind,
    pub vertices: Vec<usize>,
}

impl Embedding {
    /// Injective, in range, and adjacency-exact against the pattern.
    pub fn is_valid_in(&self, g: &Graph) -> bool {
        is_induced_copy(g, &self.pattern.graph(), &self.vertices)
    }

    pub fn vertex_set(&self, host_size: usize) -> VertexSet {
        VertexSet::from_members(host_size, self.vertices.iter().copied())
    }
}

/// Independent check that `map` embeds `pattern` into `g` as an induced subgraph.
pub fn is_induced_copy(g: &Graph, pattern: &Graph, map: &[usize]) -> bool {
    if map.len() != pattern.order() || map.iter().any(|&v| v >= g.order()) {
        return false;
    }
    for i in 0..map.len() {
        for j in 0..i {
            if map[i] == map[j] || g.is_adjacent(map[i], map[j]) != pattern.is_adjacent(i, j) {
                return false;
            }
        }
    }
    true
}

/// Lexicographically first induced embedding of `pattern` in `g`, if any.
pub fn find_induced(g: &Graph, pattern: &Graph) -> Option<Vec<usize>> {
    let k = pattern.order();
    if k > g.order() {
        return None;
    }
    let mut map = Vec::with_capacity(k);
    let used = VertexSet::empty(g.order());
    if extend(g, pattern, &mut map, &used) {
        Some(map)
    } else {
        None
    }
}

fn extend(g: &Graph, pattern: &Graph, map: &mut Vec<usize>, used: &VertexSet) -> bool {
    let i = map.len();
    if i == pattern.order() {
        return true;
    }
    let mut cand = used.complement();
    for (j, &hj) in map.iter().enumerate() {
        if pattern.is_adjacent(i, j) {
            cand.intersect_with(g.adj(hj));
        } else {
            cand.difference_with(g.adj(hj));
        }
    }
    for v in &cand {
        map.push(v);
        if extend(g, pattern, map, &used.with(v)) {
            return true;
        }
        map.pop();
    }
    false
}

fn find_named(g: &Graph, kind: PatternKind) -> Option<Embedding> {
    find_induced(g, &kind.graph()).map(|vertices| Embedding {
        pattern: kind,
        vertices,
    })
}

pub fn find_p5(g: &Graph) -> Option<Embedding> {
    find_named(g, PatternKind::P5)
}

pub fn find_c5(g: &Graph) -> Option<Embedding> {
    find_named(g, PatternKind::C5)
}

pub fn find_bull(g: &Graph) -> Option<Embedding> {
    find_named(g, PatternKind::Bull)
}

/// Every induced C5, each reported once as `c_0 .. c_4` with `c_0` its
/// smallest vertex and `c_1 < c_4`.
pub fn all_c5(g: &Graph) -> Vec<Embedding> {
    let mut out = Vec::new();
    let mut ticker = Budget::default().ticker("c5");
    let _ = induced_cycles(g, &mut ticker, &mut |cycle| {
        if cycle.len() == 5 {
            out.push(Embedding {
                pattern: PatternKind::C5,
                vertices: cycle.to_vec(),
            });
        }
        false
    });
    out
}

/// Enumerates induced cycles of length >= 4, each once: the cycle starts at
/// its smallest vertex and the second vertex is smaller than the last. The
/// visitor returns `true` to stop. Returns whether it was stopped.
fn induced_cycles(
    g: &Graph,
    ticker: &mut Ticker,
    visit: &mut dyn FnMut(&[usize]) -> bool,
) -> Result<bool, BudgetExceeded> {
    let n = g.order();
    for s in 0..n {
        let mut allowed = VertexSet::empty(n);
        for v in s + 1..n {
            allowed.insert(v);
        }
        for p1 in g.adj(s).intersection(&allowed).iter() {
            let mut path = vec![s, p1];
            let blocked = VertexSet::empty(n);
            if grow(g, &allowed, &mut path, &blocked, ticker, visit)? {
                return Ok(true);
            }
        }
    }
    Ok(false)
}

/// `blocked` is the union of closed neighbourhoods of the path's interior
/// (every vertex except the start and the current end).
fn grow(
    g: &Graph,
    allowed: &VertexSet,
    path: &mut Vec<usize>,
    blocked: &VertexSet,
    ticker: &mut Ticker,
    visit: &mut dyn FnMut(&[usize]) -> bool,
) -> Result<bool, BudgetExceeded> {
    ticker.tick()?;
    let s = path[0];
    let last = *path.last().expect("non-empty path");
    let mut cand = g.adj(last).intersection(allowed);
    cand.difference_with(blocked);
    if path.len() == 2 {
        cand.remove(path[1]);
    }
    let next_blocked = blocked.union(g.adj(last)).with(last);
    for x in &cand {
        if g.is_adjacent(x, s) {
            if path.len() >= 3 && path[1] < x {
                path.push(x);
                let stop = visit(path);
                path.pop();
                if stop {
                    return Ok(true);
                }
            }
            continue;
        }
        path.push(x);
        let stop = grow(g, allowed, path, &next_blocked, ticker, visit)?;
        path.pop();
        if stop {
            return Ok(true);
        }
    }
    Ok(false)
}

fn first_odd_cycle(g: &Graph, ticker: &mut Ticker) -> Result<Option<Vec<usize>>, BudgetExceeded> {
    let mut found = None;
    induced_cycles(g, ticker, &mut |cycle| {
        if cycle.len() >= 5 && cycle.len() % 2 == 1 {
            found = Some(cycle.to_vec());
            true
        } else {
            false
        }
    })?;
    Ok(found)
}

pub fn find_odd_hole(g: &Graph) -> Result<Option<Embedding>, BudgetExceeded> {
    find_odd_hole_with(g, &Budget::default())
}

pub fn find_odd_hole_with(g: &Graph, budget: &Budget) -> Result<Option<Embedding>, BudgetExceeded> {
    Budget::check_size("odd-hole", budget.perfect_max_n, g.order())?;
    let mut ticker = budget.ticker("odd-hole");
    Ok(first_odd_cycle(g, &mut ticker)?.map(|vertices| Embedding {
        pattern: PatternKind::OddHole(vertices.len()),
        vertices,
    }))
}

/// Odd antihole of length >= 5; C5 is reported here as well as a hole.
pub fn find_odd_antihole(g: &Graph) -> Result<Option<Embedding>, BudgetExceeded> {
    find_odd_antihole_with(g, &Budget::default())
}

pub fn find_odd_antihole_with(
    g: &Graph,
    budget: &Budget,
) -> Result<Option<Embedding>, BudgetExceeded> {
    Budget::check_size("odd-antihole", budget.perfect_max_n, g.order())?;
    let mut ticker = budget.ticker("odd-antihole");
    Ok(
        first_odd_cycle(&g.complement(), &mut ticker)?.map(|vertices| Embedding {
            pattern: PatternKind::OddAntihole(vertices.len()),
            vertices,
        }),
    )
}

/// An odd hole or odd antihole certifying imperfection, or `None` if `g` is
/// perfect. The hole search runs first, so C5 is reported once, as a hole.
pub fn imperfection_witness(g: &Graph) -> Result<Option<Embedding>, BudgetExceeded> {
    imperfection_witness_with(g, &Budget::default())
}

pub fn imperfection_witness_with(
    g: &Graph,
    budget: &Budget,
) -> Result<Option<Embedding>, BudgetExceeded> {
    if let Some(hole) = find_odd_hole_with(g, budget)? {
        return Ok(Some(hole));
    }
    find_odd_antihole_with(g, budget)
}

pub fn is_perfect(g: &Graph) -> Result<bool, BudgetExceeded> {
    Ok(imperfection_witness(g)?.is_none())
}

pub fn is_perfect_with(g: &Graph, budget: &Budget) -> Result<bool, BudgetExceeded> {
    Ok(imperfection_witness_with(g, budget)?.is_none())
}

/// Perfection of `G[s]`.
pub fn is_perfect_within(
    g: &Graph,
    s: &VertexSet,
    budget: &Budget,
) -> Result<bool, BudgetExceeded> {
    let (h, _) = g.induced_subgraph(s).expect("set over the same host");
    is_perfect_with(&h, budget)
}

/// `1 < |x| < n` and every vertex outside `x` is complete or anticomplete to it.
pub fn is_homogeneous(g: &Graph, x: &VertexSet) -> bool {
    let k = x.len();
    x.host_size() == g.order() && k > 1 && k < g.order() && splitter(g, x).is_none()
}

/// A vertex outside `x` with both a neighbour and a non-neighbour in `x`.
fn splitter(g: &Graph, x: &VertexSet) -> Option<usize> {
    let k = x.len();
    x.complement().iter().find(|&z| {
        let inside = g.adj(z).intersection_len(x);
        inside > 0 && inside < k
    })
}

/// Smallest set containing `seed` that no outside vertex splits.
pub fn module_closure(g: &Graph, seed: &VertexSet) -> VertexSet {
    let mut x = seed.clone();
    while let Some(z) = splitter(g, &x) {
        x.insert(z);
    }
    x
}

/// A homogeneous set, or `None` when `g` is prime.
///
/// Every homogeneous set contains a pair whose closure it then contains, so
/// scanning the closures of all pairs is exact. Pairs are tried in
/// lexicographic order and the first proper closure is returned.
pub fn find_homogeneous_set(g: &Graph) -> Option<VertexSet> {
    let n = g.order();
    for u in 0..n {
        for v in u + 1..n {
            let x = module_closure(g, &VertexSet::from_members(n, [u, v]));
            if x.len() < n {
                debug_assert!(is_homogeneous(g, &x));
                return Some(x);
            }
        }
    }
    None
}

pub fn is_prime(g: &Graph) -> bool {
    find_homogeneous_set(g).is_none()
}

/// Subset enumeration oracle for homogeneous sets (first in bitmask order).
pub fn find_homogeneous_set_exhaustive(
    g: &Graph,
    budget: &Budget,
) -> Result<Option<VertexSet>, BudgetExceeded> {
    let n = g.order();
    Budget::check_size(
        "homogeneous-exhaustive",
        budget.homogeneous_exhaustive_max_n.min(63),
        n,
    )?;
    let mut ticker = budget.ticker("homogeneous-exhaustive");
    for mask in 1u64..(1u64 << n) {
        ticker.tick()?;
        let x = VertexSet::from_members(n, (0..n).filter(|&i| mask >> i & 1 == 1));
        if is_homogeneous(g, &x) {
            return Ok(Some(x));
        }
    }
    Ok(None)
}

/// Membership of a graph in one forbidden-subgraph class.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Membership {
    Free,
    Contains(Embedding),
}

impl Membership {
    fn from_witness(w: Option<Embedding>) -> Self {
        w.map_or(Membership::Free, Membership::Contains)
    }

    pub fn is_free(&self) -> bool {
        matches!(self, Membership::Free)
    }

    pub fn witness(&self) -> Option<&Embedding> {
        match self {
            Membership::Free => None,
            Membership::Contains(e) => Some(e),
        }
    }
}

impl Serialize for Membership {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Repr<'a> {
            free: bool,
            #[serde(skip_serializing_if = "Option::is_none")]
            witness: Option<&'a Embedding>,
        }
        Repr {
            free: self.is_free(),
            witness: self.witness(),
        }
        .serialize(serializer)
    }
}

/// Membership flags for every class the division theorems mention, each
/// negative answer carrying its witness. `perfect` is witnessed by an odd
/// hole or odd antihole.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassReport {
    pub p5: Membership,
    pub c5: Membership,
    pub bull: Membership,
    pub odd_hole: Membership,
    pub perfect: Membership,
}

impl ClassReport {
    pub fn p5_free(&self) -> bool {
        self.p5.is_free()
    }
    pub fn c5_free(&self) -> bool {
        self.c5.is_free()
    }
    pub fn bull_free(&self) -> bool {
        self.bull.is_free()
    }
    pub fn odd_hole_free(&self) -> bool {
        self.odd_hole.is_free()
    }
    pub fn perfect(&self) -> bool {
        self.perfect.is_free()
    }
}

pub fn classify(g: &Graph) -> Result<ClassReport, BudgetExceeded> {
    classify_with(g, &Budget::default())
}

pub fn classify_with(g: &Graph, budget: &Budget) -> Result<ClassReport, BudgetExceeded> {
    let odd_hole = find_odd_hole_with(g, budget)?;
    let perfect = match &odd_hole {
        Some(h) => Some(h.clone()),
        None => find_odd_antihole_with(g, budget)?,
    };
    Ok(ClassReport {
        p5: Membership::from_witness(find_p5(g)),
        c5: Membership::from_witness(find_c5(g)),
        bull: Membership::from_witness(find_bull(g)),
        odd_hole: Membership::from_witness(odd_hole),
        perfect: Membership::from_witness(perfect),
    })
}
