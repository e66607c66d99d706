//! Complete backtracking search for list edge colorings.
//!
//! Branches on the unassigned edge with the fewest remaining colors (ties to
//! the lowest canonical edge), tries colors in ascending order and removes
//! the chosen color from every adjacent unassigned edge. A vertex whose
//! unassigned edges jointly see fewer colors than there are edges fails
//! immediately; at a vertex of full degree this catches a color that is
//! blocked on every incident edge.

use std::collections::BTreeMap;

use super::{Color, EdgeColoring, ListAssignment};
use crate::error::{Error, Result};
use crate::graph::Graph;

type Mask = u128;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SearchOutcome {
    Found(EdgeColoring),
    Unsatisfiable,
    BudgetExceeded { nodes: u64 },
}

/// Returns a proper coloring with every edge colored from its list, or
/// `None` when no such coloring exists.
pub fn exact_list_color(g: &Graph, lists: &ListAssignment) -> Result<Option<EdgeColoring>> {
    let aligned = lists.aligned(g)?;
    match search(g, &aligned, None)? {
        (SearchOutcome::Found(col), _) => Ok(Some(col)),
        (SearchOutcome::Unsatisfiable, _) => Ok(None),
        (SearchOutcome::BudgetExceeded { .. }, _) => unreachable!("search without budget"),
    }
}

/// Runs the search over lists aligned with `g.edges()`. Also returns the
/// number of branching nodes visited.
pub(crate) fn search(
    g: &Graph,
    lists: &[&[Color]],
    budget: Option<u64>,
) -> Result<(SearchOutcome, u64)> {
    let mut universe: Vec<Color> = lists.iter().flat_map(|l| l.iter().copied()).collect();
    universe.sort_unstable();
    universe.dedup();
    if universe.len() > Mask::BITS as usize {
        return Err(Error::PaletteTooLarge(universe.len()));
    }
    let bit_of = |c: Color| 1 << universe.binary_search(&c).unwrap();

    let edges = g.edges();
    let incident: Vec<Vec<usize>> = (0..g.order())
        .map(|v| {
            g.incident_edges(v)
                .map(|e| g.edge_index(e).unwrap())
                .collect()
        })
        .collect();
    let neighbors: Vec<Vec<usize>> = edges
        .iter()
        .enumerate()
        .map(|(i, e)| {
            e.endpoints()
                .iter()
                .flat_map(|&v| incident[v].iter().copied())
                .filter(|&j| j != i)
                .collect()
        })
        .collect();
    let domain: Vec<Mask> = lists
        .iter()
        .map(|l| l.iter().fold(0, |m, &c| m | bit_of(c)))
        .collect();

    let mut solver = Solver {
        edges: edges.iter().map(|e| e.endpoints()).collect(),
        incident,
        neighbors,
        domain,
        assigned: vec![None; edges.len()],
        trail: Vec::new(),
        touched: Vec::new(),
        nodes: 0,
        budget,
    };

    let consistent = solver.domain.iter().all(|&d| d != 0)
        && (0..g.order()).all(|v| solver.vertex_ok(v));
    let step = if consistent { solver.dfs() } else { Step::Fail };
    let outcome = match step {
        Step::Found => {
            let assignment: BTreeMap<_, _> = edges
                .iter()
                .zip(&solver.assigned)
                .map(|(&e, a)| (e, universe[a.unwrap() as usize]))
                .collect();
            let palette = universe.last().copied().unwrap_or(0);
            SearchOutcome::Found(EdgeColoring::from_assignment(palette, assignment))
        }
        Step::Fail => SearchOutcome::Unsatisfiable,
        Step::Budget => SearchOutcome::BudgetExceeded {
            nodes: solver.nodes,
        },
    };
    Ok((outcome, solver.nodes))
}

enum Step {
    Found,
    Fail,
    Budget,
}

struct Solver {
    edges: Vec<[usize; 2]>,
    incident: Vec<Vec<usize>>,
    neighbors: Vec<Vec<usize>>,
    domain: Vec<Mask>,
    assigned: Vec<Option<u8>>,
    trail: Vec<(usize, Mask)>,
    touched: Vec<usize>,
    nodes: u64,
    budget: Option<u64>,
}

impl Solver {
    fn dfs(&mut self) -> Step {
        let Some(e) = self.pick() else {
            return Step::Found;
        };
        let mut options = self.domain[e];
        while options != 0 {
            let c = options.trailing_zeros() as u8;
            options &= options - 1;
            self.nodes += 1;
            if self.budget.is_some_and(|b| self.nodes > b) {
                return Step::Budget;
            }
            let mark = self.trail.len();
            self.assigned[e] = Some(c);
            if self.propagate(e, c) {
                match self.dfs() {
                    Step::Fail => {}
                    done => return done,
                }
            }
            self.undo(mark);
            self.assigned[e] = None;
        }
        Step::Fail
    }

    /// Unassigned edge with the smallest domain, lowest index on ties.
    fn pick(&self) -> Option<usize> {
        (0..self.domain.len())
            .filter(|&i| self.assigned[i].is_none())
            .min_by_key(|&i| (self.domain[i].count_ones(), i))
    }

    fn propagate(&mut self, e: usize, c: u8) -> bool {
        let bit: Mask = 1 << c;
        self.touched.clear();
        self.touched.extend(self.edges[e]);
        for k in 0..self.neighbors[e].len() {
            let f = self.neighbors[e][k];
            if self.assigned[f].is_some() || self.domain[f] & bit == 0 {
                continue;
            }
            self.trail.push((f, self.domain[f]));
            self.domain[f] &= !bit;
            if self.domain[f] == 0 {
                return false;
            }
            self.touched.extend(self.edges[f]);
        }
        let touched = std::mem::take(&mut self.touched);
        let ok = touched.iter().all(|&v| self.vertex_ok(v));
        self.touched = touched;
        ok
    }

    /// Unassigned edges at `v` must jointly see at least as many colors as
    /// there are of them.
    fn vertex_ok(&self, v: usize) -> bool {
        let mut union: Mask = 0;
        let mut open = 0;
        for &f in &self.incident[v] {
            if self.assigned[f].is_none() {
                union |= self.domain[f];
                open += 1;
            }
        }
        union.count_ones() >= open
    }

    fn undo(&mut self, mark: usize) {
        while self.trail.len() > mark {
            let (f, d) = self.trail.pop().unwrap();
            self.domain[f] = d;
        }
    }
}
