//! Exact chromatic number by DSATUR-ordered backtracking.

use crate::budget::{Budget, Ticker};
use crate::clique::clique_number;
use crate::coloring::Coloring;
use crate::error::BudgetExceeded;
use crate::graph::Graph;
use crate::set::VertexSet;

/// `χ(G)` with an optimal proper colouring, under the default budget.
pub fn chromatic_number_exact(g: &Graph) -> Result<(usize, Coloring), BudgetExceeded> {
    chromatic_number_exact_with(g, &Budget::default())
}

pub fn chromatic_number_exact_with(
    g: &Graph,
    budget: &Budget,
) -> Result<(usize, Coloring), BudgetExceeded> {
    Budget::check_size("chromatic", budget.chromatic_max_n, g.order())?;
    let n = g.order();
    if n == 0 {
        return Ok((0, Coloring::from_assignment(Vec::new())));
    }
    let lower = clique_number(g).value as usize;
    let greedy = dsatur_greedy(g);
    let upper = greedy.iter().max().map_or(0, |&c| c + 1);
    let mut ticker = budget.ticker("chromatic");
    for k in lower..upper {
        let mut colours = vec![None; n];
        if colour_with(g, k, &mut colours, 0, &mut ticker)? {
            let assignment = colours
                .into_iter()
                .map(|c| c.expect("complete colouring"))
                .collect();
            return Ok((k, Coloring::from_assignment(assignment)));
        }
    }
    Ok((upper, Coloring::from_assignment(greedy)))
}

fn saturation(g: &Graph, colours: &[Option<usize>], v: usize) -> usize {
    let mut seen = 0u64;
    let mut wide: Vec<usize> = Vec::new();
    for u in g.adj(v) {
        if let Some(c) = colours[u] {
            if c < 64 {
                seen |= 1 << c;
            } else if !wide.contains(&c) {
                wide.push(c);
            }
        }
    }
    seen.count_ones() as usize + wide.len()
}

/// Uncoloured vertex of maximum saturation, then maximum degree, then smallest id.
fn pick(g: &Graph, colours: &[Option<usize>]) -> Option<usize> {
    (0..g.order())
        .filter(|&v| colours[v].is_none())
        .max_by(|&a, &b| {
            (saturation(g, colours, a), g.degree(a))
                .cmp(&(saturation(g, colours, b), g.degree(b)))
                .then(b.cmp(&a))
        })
}

fn dsatur_greedy(g: &Graph) -> Vec<usize> {
    let mut colours = vec![None; g.order()];
    while let Some(v) = pick(g, &colours) {
        let used: VertexSet =
            VertexSet::from_members(g.order() + 1, g.adj(v).iter().filter_map(|u| colours[u]));
        colours[v] = (0..=g.order()).find(|&c| !used.contains(c));
    }
    colours
        .into_iter()
        .map(|c| c.expect("every vertex coloured"))
        .collect()
}

fn colour_with(
    g: &Graph,
    k: usize,
    colours: &mut [Option<usize>],
    used: usize,
    ticker: &mut Ticker,
) -> Result<bool, BudgetExceeded> {
    ticker.tick()?;
    let Some(v) = pick(g, colours) else {
        return Ok(true);
    };
    // A fresh colour is only tried once: colours are interchangeable.
    for c in 0..k.min(used + 1) {
        if g.adj(v).iter().any(|u| colours[u] == Some(c)) {
            continue;
        }
        colours[v] = Some(c);
        if colour_with(g, k, colours, used.max(c + 1), ticker)? {
            return Ok(true);
        }
        colours[v] = None;
    }
    Ok(false)
}
