//! Brute-force oracles used only by tests. They share nothing with the
//! library beyond `Graph::is_adjacent` and `Graph::order`.

#![allow(dead_code)]

use graph_divisibility::Graph;

pub fn matrix(g: &Graph) -> Vec<Vec<bool>> {
    let n = g.order();
    (0..n)
        .map(|u| (0..n).map(|v| g.is_adjacent(u, v)).collect())
        .collect()
}

fn members(mask: u32) -> Vec<usize> {
    (0..32).filter(|&i| mask >> i & 1 == 1).collect()
}

pub fn is_clique_mask(m: &[Vec<bool>], mask: u32) -> bool {
    let vs = members(mask);
    vs.iter()
        .enumerate()
        .all(|(i, &u)| vs[i + 1..].iter().all(|&v| m[u][v]))
}

/// Largest clique inside `within`.
pub fn clique_number(m: &[Vec<bool>], within: u32) -> usize {
    let mut best = 0;
    let mut sub = within;
    loop {
        if sub.count_ones() as usize > best && is_clique_mask(m, sub) {
            best = sub.count_ones() as usize;
        }
        if sub == 0 {
            return best;
        }
        sub = (sub - 1) & within;
    }
}

/// Smallest k admitting a proper colouring of the vertices in `within`.
pub fn chromatic_number(m: &[Vec<bool>], within: u32) -> usize {
    let vs = members(within);
    fn fits(m: &[Vec<bool>], vs: &[usize], colour: &mut Vec<usize>, k: usize) -> bool {
        let i = colour.len();
        if i == vs.len() {
            return true;
        }
        for c in 0..k {
            if (0..i).all(|j| !m[vs[i]][vs[j]] || colour[j] != c) {
                colour.push(c);
                if fits(m, vs, colour, k) {
                    return true;
                }
                colour.pop();
            }
        }
        false
    }
    (0..=vs.len())
        .find(|&k| fits(m, &vs, &mut Vec::new(), k))
        .unwrap()
}

/// Every induced subgraph has `χ = ω`.
pub fn is_perfect_by_definition(m: &[Vec<bool>]) -> bool {
    let n = m.len();
    (0u32..1 << n).all(|s| chromatic_number(m, s) == clique_number(m, s))
}

/// `mask` induces a cycle on at least 4 vertices in `m`.
fn induces_hole(m: &[Vec<bool>], mask: u32) -> bool {
    let vs = members(mask);
    if vs.len() < 4
        || vs
            .iter()
            .any(|&u| vs.iter().filter(|&&v| m[u][v]).count() != 2)
    {
        return false;
    }
    let mut seen = vec![vs[0]];
    let mut frontier = vec![vs[0]];
    while let Some(u) = frontier.pop() {
        for &v in &vs {
            if m[u][v] && !seen.contains(&v) {
                seen.push(v);
                frontier.push(v);
            }
        }
    }
    seen.len() == vs.len()
}

pub fn has_odd_hole(m: &[Vec<bool>]) -> bool {
    let n = m.len();
    (0u32..1 << n).any(|s| s.count_ones() >= 5 && s.count_ones() % 2 == 1 && induces_hole(m, s))
}

pub fn complement(m: &[Vec<bool>]) -> Vec<Vec<bool>> {
    let n = m.len();
    (0..n)
        .map(|u| (0..n).map(|v| u != v && !m[u][v]).collect())
        .collect()
}

pub fn has_odd_antihole(m: &[Vec<bool>]) -> bool {
    has_odd_hole(&complement(m))
}

pub const P5: &[(usize, usize)] = &[(0, 1), (1, 2), (2, 3), (3, 4)];
pub const C5: &[(usize, usize)] = &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)];
/// Triangle 1-2-3 with pendants 0 (at 1) and 4 (at 2).
pub const BULL: &[(usize, usize)] = &[(0, 1), (1, 2), (1, 3), (2, 3), (2, 4)];

/// Lexicographically first injective map of the 5-vertex pattern onto an
/// induced copy, by scanning all 5-tuples in order.
pub fn first_embedding(m: &[Vec<bool>], pattern: &[(usize, usize)]) -> Option<Vec<usize>> {
    let n = m.len();
    let mut p = [[false; 5]; 5];
    for &(a, b) in pattern {
        p[a][b] = true;
        p[b][a] = true;
    }
    let mut tuple = Vec::with_capacity(5);
    fn rec(m: &[Vec<bool>], p: &[[bool; 5]; 5], n: usize, tuple: &mut Vec<usize>) -> bool {
        if tuple.len() == 5 {
            return (0..5).all(|i| (0..5).all(|j| i == j || m[tuple[i]][tuple[j]] == p[i][j]));
        }
        for v in 0..n {
            if !tuple.contains(&v) {
                tuple.push(v);
                if rec(m, p, n, tuple) {
                    return true;
                }
                tuple.pop();
            }
        }
        false
    }
    rec(m, &p, n, &mut tuple).then_some(tuple)
}

pub fn is_homogeneous_mask(m: &[Vec<bool>], x: u32) -> bool {
    let n = m.len();
    let xs = members(x);
    (0..n)
        .filter(|v| x >> v & 1 == 0)
        .all(|v| xs.iter().all(|&u| m[v][u]) || xs.iter().all(|&u| !m[v][u]))
}

pub fn has_homogeneous_set(m: &[Vec<bool>]) -> bool {
    let n = m.len();
    (0u32..1 << n)
        .any(|x| x.count_ones() >= 2 && (x.count_ones() as usize) < n && is_homogeneous_mask(m, x))
}

/// Graph on up to `max_n` vertices with independently chosen edges.
pub fn arb_graph(max_n: usize) -> impl proptest::strategy::Strategy<Value = Graph> {
    use proptest::prelude::*;
    (0..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * n.saturating_sub(1) / 2).prop_map(
            move |bits| {
                let mut k = 0;
                Graph::from_fn(n, |_, _| {
                    k += 1;
                    bits[k - 1]
                })
            },
        )
    })
}
