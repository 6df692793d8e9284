//! Canonical labelling for small graphs (n ≤ 16).
//!
//! The code of a vertex order is the graph6 upper-triangle bit string read
//! as an integer, first bit most significant. The canonical code is the
//! minimum over the leaves of an individualisation-refinement tree: cells
//! are refined by neighbour counts, the first non-singleton cell is split by
//! individualising each of its vertices in turn, and only one vertex per twin
//! class is tried (swapping twins is an automorphism fixing the partition).

use crate::graph::Graph;

pub const MAX_N: usize = 16;

/// Canonical code of `g`; equal codes on graphs of equal order mean isomorphic.
pub fn canonical_code(g: &Graph) -> u128 {
    canonical_labeling(g).1
}

/// A vertex order whose code is minimum, with that code. `order[i]` is the
/// vertex of `g` placed at position `i`.
pub fn canonical_labeling(g: &Graph) -> (Vec<usize>, u128) {
    let n = g.order();
    assert!(
        n <= MAX_N,
        "canonical forms support at most {MAX_N} vertices, got {n}"
    );
    let adj: Vec<u16> = (0..n)
        .map(|v| g.adj(v).iter().fold(0u16, |m, u| m | 1 << u))
        .collect();
    let mut best: Option<(u128, Vec<usize>)> = None;
    let start = if n == 0 {
        Vec::new()
    } else {
        vec![(0..n).collect()]
    };
    let cells = refine(&adj, start);
    search(&adj, cells, &mut best);
    let (code, order) = best.unwrap_or((0, Vec::new()));
    (order, code)
}

/// `g` relabelled into canonical order.
pub fn canonical_form(g: &Graph) -> Graph {
    let (order, _) = canonical_labeling(g);
    g.permuted(&order)
}

pub fn are_isomorphic(g: &Graph, h: &Graph) -> bool {
    g.order() == h.order()
        && g.edge_count() == h.edge_count()
        && canonical_code(g) == canonical_code(h)
}

/// Graph on `n` vertices with the given code.
pub fn graph_from_code(n: usize, code: u128) -> Graph {
    let bits = n * n.saturating_sub(1) / 2;
    let mut k = 0;
    let mut edges = Vec::new();
    for j in 1..n {
        for i in 0..j {
            if code >> (bits - 1 - k) & 1 == 1 {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    Graph::from_edges(n, edges).expect("code edges are in range")
}

fn code_of(adj: &[u16], order: &[usize]) -> u128 {
    let mut code = 0u128;
    for j in 1..order.len() {
        for i in 0..j {
            code = code << 1 | (adj[order[i]] >> order[j] & 1) as u128;
        }
    }
    code
}

fn search(adj: &[u16], cells: Vec<Vec<usize>>, best: &mut Option<(u128, Vec<usize>)>) {
    let Some(target) = cells.iter().position(|c| c.len() > 1) else {
        let order: Vec<usize> = cells.into_iter().flatten().collect();
        let code = code_of(adj, &order);
        if best.as_ref().is_none_or(|(b, _)| code < *b) {
            *best = Some((code, order));
        }
        return;
    };
    let cell = &cells[target];
    let mut tried: Vec<usize> = Vec::new();
    for &v in cell {
        let twin = tried.iter().any(|&u| {
            let mask = !(1u16 << u | 1u16 << v);
            adj[u] & mask == adj[v] & mask
        });
        if twin {
            continue;
        }
        tried.push(v);
        let mut next = cells[..target].to_vec();
        next.push(vec![v]);
        next.push(cell.iter().copied().filter(|&u| u != v).collect());
        next.extend(cells[target + 1..].iter().cloned());
        search(adj, refine(adj, next), best);
    }
}

/// Splits cells by neighbour counts into each cell until stable. Split
/// pieces keep the position of their parent, ordered by increasing count.
fn refine(adj: &[u16], mut cells: Vec<Vec<usize>>) -> Vec<Vec<usize>> {
    loop {
        let mut changed = false;
        let mut s = 0;
        while s < cells.len() {
            let splitter: u16 = cells[s].iter().fold(0, |m, &v| m | 1 << v);
            let mut out = Vec::with_capacity(cells.len());
            for cell in cells.drain(..) {
                if cell.len() <= 1 {
                    out.push(cell);
                    continue;
                }
                let mut keyed: Vec<(u32, usize)> = cell
                    .iter()
                    .map(|&v| ((adj[v] & splitter).count_ones(), v))
                    .collect();
                keyed.sort_unstable();
                let mut start = 0;
                for i in 1..=keyed.len() {
                    if i == keyed.len() || keyed[i].0 != keyed[start].0 {
                        out.push(keyed[start..i].iter().map(|&(_, v)| v).collect());
                        start = i;
                    }
                }
                changed |= keyed[0].0 != keyed[keyed.len() - 1].0;
            }
            cells = out;
            s += 1;
        }
        if !changed {
            return cells;
        }
    }
}
