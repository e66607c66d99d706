//! Edge-coloring engines and coloring verification.

mod factorization;
mod galvin;
mod konig;
pub(crate) mod search;

use std::collections::{BTreeMap, BTreeSet};

pub use factorization::one_factorization;
pub use galvin::galvin_list_color;
pub use konig::konig_color;
pub use search::exact_list_color;

use crate::error::{Error, Result};
use crate::graph::{EdgeId, Graph};

/// Colors are positive integers.
pub type Color = u32;

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct EdgeColoring {
    palette_size: Color,
    assignment: BTreeMap<EdgeId, Color>,
}

impl EdgeColoring {
    pub fn new(palette_size: Color) -> Self {
        EdgeColoring {
            palette_size,
            assignment: BTreeMap::new(),
        }
    }

    pub fn from_assignment(palette_size: Color, assignment: BTreeMap<EdgeId, Color>) -> Self {
        EdgeColoring {
            palette_size,
            assignment,
        }
    }

    pub fn palette_size(&self) -> Color {
        self.palette_size
    }

    pub fn set_palette_size(&mut self, palette_size: Color) {
        self.palette_size = palette_size;
    }

    pub fn get(&self, e: EdgeId) -> Option<Color> {
        self.assignment.get(&e).copied()
    }

    pub fn insert(&mut self, e: EdgeId, c: Color) -> Option<Color> {
        self.assignment.insert(e, c)
    }

    pub fn len(&self) -> usize {
        self.assignment.len()
    }

    pub fn is_empty(&self) -> bool {
        self.assignment.is_empty()
    }

    /// Entries in canonical edge order.
    pub fn iter(&self) -> impl Iterator<Item = (EdgeId, Color)> + '_ {
        self.assignment.iter().map(|(&e, &c)| (e, c))
    }

    pub fn assignment(&self) -> &BTreeMap<EdgeId, Color> {
        &self.assignment
    }

    /// Colors on the edges of `g` at `v` that are assigned here.
    pub fn colors_at(&self, g: &Graph, v: usize) -> BTreeSet<Color> {
        g.incident_edges(v).filter_map(|e| self.get(e)).collect()
    }

    pub fn distinct_colors(&self) -> BTreeSet<Color> {
        self.assignment.values().copied().collect()
    }
}

/// Per-edge color lists together with the demand `max(d(u), d(v))` of each
/// edge in the graph the lists were built for.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ListAssignment {
    lists: BTreeMap<EdgeId, Vec<Color>>,
    demand: BTreeMap<EdgeId, usize>,
}

impl ListAssignment {
    /// Lists are sorted and deduplicated; every edge of `g` needs one.
    pub fn new(g: &Graph, lists: BTreeMap<EdgeId, Vec<Color>>) -> Result<Self> {
        let mut normalized = BTreeMap::new();
        for (e, mut list) in lists {
            g.check_edge(e)?;
            list.sort_unstable();
            list.dedup();
            normalized.insert(e, list);
        }
        if let Some(&e) = g.edges().iter().find(|e| !normalized.contains_key(e)) {
            return Err(Error::MissingEdgeAssignment(e));
        }
        let demand = g
            .edges()
            .iter()
            .map(|&e| (e, g.degree(e.lo()).max(g.degree(e.hi()))))
            .collect();
        Ok(ListAssignment {
            lists: normalized,
            demand,
        })
    }

    /// Every edge gets `1..=palette`.
    pub fn uniform(g: &Graph, palette: Color) -> Self {
        let full: Vec<Color> = (1..=palette).collect();
        let lists = g.edges().iter().map(|&e| (e, full.clone())).collect();
        ListAssignment::new(g, lists).expect("uniform lists cover every edge")
    }

    pub fn list(&self, e: EdgeId) -> Option<&[Color]> {
        self.lists.get(&e).map(Vec::as_slice)
    }

    pub fn demand(&self, e: EdgeId) -> Option<usize> {
        self.demand.get(&e).copied()
    }

    pub fn iter(&self) -> impl Iterator<Item = (EdgeId, &[Color])> + '_ {
        self.lists.iter().map(|(&e, l)| (e, l.as_slice()))
    }

    pub fn min_len(&self) -> usize {
        self.lists.values().map(Vec::len).min().unwrap_or(0)
    }

    /// All colors appearing in some list, ascending.
    pub fn universe(&self) -> Vec<Color> {
        let colors: BTreeSet<Color> = self.lists.values().flatten().copied().collect();
        colors.into_iter().collect()
    }

    /// Lists aligned with `g.edges()`.
    pub(crate) fn aligned(&self, g: &Graph) -> Result<Vec<&[Color]>> {
        g.edges()
            .iter()
            .map(|&e| self.list(e).ok_or(Error::MissingEdgeAssignment(e)))
            .collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Conflict {
    pub vertex: usize,
    pub first: EdgeId,
    pub second: EdgeId,
    pub color: Color,
}

/// Everything wrong with a coloring; empty means valid.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ColoringReport {
    pub conflicts: Vec<Conflict>,
    pub list_violations: Vec<(EdgeId, Color)>,
    pub palette_violations: Vec<(EdgeId, Color)>,
}

impl ColoringReport {
    pub fn is_valid(&self) -> bool {
        self.conflicts.is_empty()
            && self.list_violations.is_empty()
            && self.palette_violations.is_empty()
    }
}

impl std::fmt::Display for ColoringReport {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_valid() {
            return f.write_str("valid");
        }
        for c in &self.conflicts {
            writeln!(
                f,
                "conflict at vertex {}: edges {} and {} both colored {}",
                c.vertex, c.first, c.second, c.color
            )?;
        }
        for (e, c) in &self.list_violations {
            writeln!(f, "edge {e} colored {c}, not in its list")?;
        }
        for (e, c) in &self.palette_violations {
            writeln!(f, "edge {e} colored {c}, outside the palette")?;
        }
        Ok(())
    }
}

pub fn verify_proper(
    g: &Graph,
    coloring: &EdgeColoring,
    lists: Option<&ListAssignment>,
) -> Result<ColoringReport> {
    for (e, _) in coloring.iter() {
        g.check_edge(e)?;
    }
    if let Some(&e) = g.edges().iter().find(|&&e| coloring.get(e).is_none()) {
        return Err(Error::MissingEdgeAssignment(e));
    }
    let mut report = ColoringReport::default();
    for v in 0..g.order() {
        let incident: Vec<(EdgeId, Color)> = g
            .incident_edges(v)
            .map(|e| (e, coloring.get(e).unwrap()))
            .collect();
        for (i, &(e, c)) in incident.iter().enumerate() {
            for &(f, d) in &incident[i + 1..] {
                if c == d {
                    report.conflicts.push(Conflict {
                        vertex: v,
                        first: e,
                        second: f,
                        color: c,
                    });
                }
            }
        }
    }
    for (e, c) in coloring.iter() {
        if c == 0 || c > coloring.palette_size() {
            report.palette_violations.push((e, c));
        }
        if let Some(lists) = lists {
            if !lists.list(e).is_some_and(|l| l.binary_search(&c).is_ok()) {
                report.list_violations.push((e, c));
            }
        }
    }
    Ok(report)
}

/// List edge coloring of a bipartite graph whose lists satisfy
/// `|L(uv)| >= max(d(u), d(v))`. Such a coloring always exists; lists of at
/// least `Δ(g)` colors go through the kernel method, anything shorter through
/// the exact search.
pub fn bkw_list_color(g: &Graph, lists: &ListAssignment) -> Result<EdgeColoring> {
    g.bipartition()?;
    for &e in g.edges() {
        let len = lists.list(e).ok_or(Error::MissingEdgeAssignment(e))?.len();
        let demand = g.degree(e.lo()).max(g.degree(e.hi()));
        if len < demand {
            return Err(Error::DemandViolation { edge: e, len, demand });
        }
    }
    if lists.min_len() >= g.max_degree() {
        galvin_list_color(g, lists)
    } else {
        log::debug!("short lists on {} edges, using exact search", g.size());
        exact_list_color(g, lists)?.ok_or(Error::InternalTheoremViolation)
    }
}
