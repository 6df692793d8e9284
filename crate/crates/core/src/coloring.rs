//! Colourings obtained by recursing on divisions.
//!
//! Every recursion branch receives its own block of colour ids, assigned in
//! recursion order, so the number of colours is additive over the branches.
//! [`PaletteBlock`]s record which vertices took which ids.

use std::fmt;
use std::ops::Range;

use serde::Serialize;

use crate::budget::Budget;
use crate::chromatic::chromatic_number_exact_with;
use crate::clique::clique_number;
use crate::divisibility::{
    perfect_divide_within, require_perfect_class, two_divide_recursive, DerivationLog,
    DivisionError,
};
use crate::exec::Execution;
use crate::graph::Graph;
use crate::recognition::{find_odd_hole_with, find_p5};
use crate::set::VertexSet;
use crate::weight::WeightFn;

/// A vertex colouring; colours are arbitrary ids.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Coloring {
    assignment: Vec<usize>,
    palette_size: usize,
}

impl Coloring {
    pub fn from_assignment(assignment: Vec<usize>) -> Self {
        let mut distinct = assignment.clone();
        distinct.sort_unstable();
        distinct.dedup();
        Coloring {
            palette_size: distinct.len(),
            assignment,
        }
    }

    pub fn assignment(&self) -> &[usize] {
        &self.assignment
    }

    pub fn color(&self, v: usize) -> usize {
        self.assignment[v]
    }

    /// Number of distinct colours used.
    pub fn palette_size(&self) -> usize {
        self.palette_size
    }

    /// No edge is monochromatic, checked edge by edge.
    pub fn is_proper(&self, g: &Graph) -> bool {
        self.assignment.len() == g.order()
            && g.edges()
                .all(|(u, v)| self.assignment[u] != self.assignment[v])
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum BoundKind {
    /// `2^(ω-1)`.
    PowerOfTwo,
    /// `C(ω+1, 2)`.
    Quadratic,
}

impl BoundKind {
    /// The bound for clique number `omega`; 0 for the empty graph.
    pub fn value(self, omega: u64) -> u64 {
        match self {
            _ if omega == 0 => 0,
            BoundKind::PowerOfTwo => 1u64.checked_shl((omega - 1) as u32).unwrap_or(u64::MAX),
            BoundKind::Quadratic => omega * (omega + 1) / 2,
        }
    }
}

impl fmt::Display for BoundKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            BoundKind::PowerOfTwo => "power-of-two",
            BoundKind::Quadratic => "quadratic",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct BoundCertificate {
    pub omega: u64,
    pub kind: BoundKind,
    pub bound_value: u64,
    pub colors_used: usize,
}

impl BoundCertificate {
    fn new(omega: u64, kind: BoundKind, colors_used: usize) -> Self {
        BoundCertificate {
            omega,
            kind,
            bound_value: kind.value(omega),
            colors_used,
        }
    }

    pub fn holds(&self) -> bool {
        self.colors_used as u64 <= self.bound_value
    }
}

/// Vertices coloured from one contiguous range of colour ids.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PaletteBlock {
    pub vertices: VertexSet,
    pub colors: Range<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ColoringOutcome {
    pub coloring: Coloring,
    pub certificate: BoundCertificate,
    /// In recursion order; ranges are consecutive and disjoint.
    pub blocks: Vec<PaletteBlock>,
    pub log: DerivationLog,
}

impl ColoringOutcome {
    /// Blocks partition the vertices, ranges are disjoint, and every vertex
    /// carries a colour from its own block's range.
    pub fn blocks_are_consistent(&self, n: usize) -> bool {
        let mut seen = VertexSet::empty(n);
        let mut next = 0;
        for block in &self.blocks {
            if block.colors.start != next || !block.vertices.is_disjoint(&seen) {
                return false;
            }
            next = block.colors.end;
            seen.union_with(&block.vertices);
            if !block
                .vertices
                .iter()
                .all(|v| block.colors.contains(&self.coloring.color(v)))
            {
                return false;
            }
        }
        seen == VertexSet::full(n)
    }
}

/// Colours a (P5, C5)-free graph with one colour per leaf of its recursive
/// 2-division.
pub fn color_via_two_division(g: &Graph) -> Result<ColoringOutcome, DivisionError> {
    let n = g.order();
    let tree = two_divide_recursive(g)?;
    let mut assignment = vec![usize::MAX; n];
    let mut blocks = Vec::new();
    for leaf in tree.division.leaves() {
        if leaf.vertices.is_empty() {
            continue;
        }
        let c = blocks.len();
        for v in &leaf.vertices {
            assignment[v] = c;
        }
        blocks.push(PaletteBlock {
            vertices: leaf.vertices.clone(),
            colors: c..c + 1,
        });
    }
    let coloring = Coloring::from_assignment(assignment);
    let certificate = BoundCertificate::new(
        tree.division.omega,
        BoundKind::PowerOfTwo,
        coloring.palette_size(),
    );
    Ok(ColoringOutcome {
        coloring,
        certificate,
        blocks,
        log: tree.log,
    })
}

/// Which hypothesis of the perfect-division theorem the caller relies on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ClassHint {
    /// Bull-free and at least one of odd-hole-free, P5-free.
    #[default]
    Detect,
    OddHoleFree,
    P5Free,
}

pub fn color_via_perfect_division(
    g: &Graph,
    hint: ClassHint,
) -> Result<ColoringOutcome, DivisionError> {
    color_via_perfect_division_with(g, hint, &Budget::default())
}

/// Colours `P` exactly with `ω(P)` colours, then recurses on `W` with fresh ids.
pub fn color_via_perfect_division_with(
    g: &Graph,
    hint: ClassHint,
    budget: &Budget,
) -> Result<ColoringOutcome, DivisionError> {
    require_perfect_class(g, budget)?;
    match hint {
        ClassHint::Detect => {}
        ClassHint::OddHoleFree => {
            if let Some(hole) = find_odd_hole_with(g, budget)? {
                return Err(DivisionError::NotInClass {
                    requirement: "odd-hole-free",
                    witnesses: vec![hole],
                });
            }
        }
        ClassHint::P5Free => {
            if let Some(p5) = find_p5(g) {
                return Err(DivisionError::NotInClass {
                    requirement: "P5-free",
                    witnesses: vec![p5],
                });
            }
        }
    }
    let n = g.order();
    let unit = WeightFn::unit(n);
    let mut log = DerivationLog::default();
    let mut assignment = vec![usize::MAX; n];
    let mut blocks = Vec::new();
    let mut rest = g.vertices();
    let mut next = 0;
    let mut depth = 0;
    while !rest.is_empty() {
        let division = perfect_divide_within(g, &rest, &unit, budget, &mut log, depth)?;
        let (h, map) = g.induced_subgraph(&division.p)?;
        let (k, local) = chromatic_number_exact_with(&h, budget)?;
        for (i, &v) in map.iter().enumerate() {
            assignment[v] = next + local.color(i);
        }
        blocks.push(PaletteBlock {
            vertices: division.p,
            colors: next..next + k,
        });
        next += k;
        rest = division.w_side;
        depth += 1;
    }
    let coloring = Coloring::from_assignment(assignment);
    let certificate = BoundCertificate::new(
        clique_number(g).value,
        BoundKind::Quadratic,
        coloring.palette_size(),
    );
    Ok(ColoringOutcome {
        coloring,
        certificate,
        blocks,
        log,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AuditRow {
    pub id: String,
    pub omega: u64,
    pub chi: Option<usize>,
    pub used: Option<usize>,
    pub bound: u64,
    pub slack: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

/// One row per graph. Failures (class, budget) are recorded in the row.
pub fn audit_bounds(
    corpus: &[(String, Graph)],
    kind: BoundKind,
    budget: &Budget,
    exec: Execution,
) -> Vec<AuditRow> {
    exec.map(corpus, |(id, g)| audit_one(id, g, kind, budget))
}

fn audit_one(id: &str, g: &Graph, kind: BoundKind, budget: &Budget) -> AuditRow {
    let omega = clique_number(g).value;
    let mut row = AuditRow {
        id: id.to_string(),
        omega,
        chi: None,
        used: None,
        bound: kind.value(omega),
        slack: None,
        error: None,
    };
    let outcome = match kind {
        BoundKind::PowerOfTwo => color_via_two_division(g),
        BoundKind::Quadratic => color_via_perfect_division_with(g, ClassHint::Detect, budget),
    };
    match outcome {
        Ok(out) => {
            let used = out.coloring.palette_size();
            row.used = Some(used);
            row.slack = Some(row.bound as i64 - used as i64);
            if !out.coloring.is_proper(g) {
                row.error = Some("colouring is not proper".into());
            }
        }
        Err(e) => row.error = Some(e.to_string()),
    }
    match chromatic_number_exact_with(g, budget) {
        Ok((chi, _)) => row.chi = Some(chi),
        Err(e) => {
            row.error.get_or_insert_with(|| e.to_string());
        }
    }
    row
}

/// CSV with header `id,omega,chi,used,bound,slack`; missing values are empty.
pub fn audit_csv(rows: &[AuditRow]) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(["id", "omega", "chi", "used", "bound", "slack"])
        .expect("write to memory");
    let opt = |x: Option<String>| x.unwrap_or_default();
    for r in rows {
        w.write_record([
            r.id.clone(),
            r.omega.to_string(),
            opt(r.chi.map(|c| c.to_string())),
            opt(r.used.map(|c| c.to_string())),
            r.bound.to_string(),
            opt(r.slack.map(|c| c.to_string())),
        ])
        .expect("write to memory");
    }
    String::from_utf8(w.into_inner().expect("flush to memory")).expect("CSV is UTF-8")
}
