//! Exact extendability decisions and provably non-extendable instances.

use crate::coloring::search::{search, SearchOutcome};
use crate::coloring::{Color, EdgeColoring};
use crate::error::{Error, Result};
use crate::extension::{validate_precoloring, Precoloring};
use crate::families::{cartesian_product, ProductGraph};
use crate::graph::{EdgeId, Graph};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    Extendable(EdgeColoring),
    NotExtendable,
}

impl Verdict {
    pub fn is_extendable(&self) -> bool {
        matches!(self, Verdict::Extendable(_))
    }
}

/// Decides whether `pre` extends to a proper coloring of `g` with colors
/// `1..=palette`. Running out of `budget` search nodes is an error, never a
/// negative verdict.
pub fn decide_extendable(
    g: &Graph,
    pre: &Precoloring,
    palette: Color,
    budget: Option<u64>,
) -> Result<Verdict> {
    for (e, c) in pre.iter() {
        g.check_edge(e)?;
        if c == 0 || c > palette {
            return Err(Error::BadParameter(format!(
                "precolored edge {e} has color {c} outside 1..={palette}"
            )));
        }
    }
    let full: Vec<Color> = (1..=palette).collect();
    let singles: Vec<[Color; 1]> = g
        .edges()
        .iter()
        .map(|&e| [pre.get(e).unwrap_or(0)])
        .collect();
    let lists: Vec<&[Color]> = g
        .edges()
        .iter()
        .zip(&singles)
        .map(|(&e, single)| {
            if pre.get(e).is_some() {
                single.as_slice()
            } else {
                full.as_slice()
            }
        })
        .collect();
    let (outcome, nodes) = search(g, &lists, budget)?;
    log::debug!("oracle visited {nodes} nodes");
    match outcome {
        SearchOutcome::Found(mut coloring) => {
            coloring.set_palette_size(palette);
            let report = crate::coloring::verify_proper(g, &coloring, None)?;
            if !report.is_valid() || !pre.disagreements(&coloring).is_empty() {
                return Err(Error::InternalProofInvariantViolated(format!(
                    "oracle witness failed verification: {report}"
                )));
            }
            Ok(Verdict::Extendable(coloring))
        }
        SearchOutcome::Unsatisfiable => Ok(Verdict::NotExtendable),
        SearchOutcome::BudgetExceeded { nodes } => Err(Error::BudgetExceeded { nodes }),
    }
}

/// Edges avoiding `v`, pairwise at distance at least 2, whose endpoints
/// cover every neighbor of `v`.
///
/// Neighbors are covered in ascending order, each by the lexicographically
/// smallest compatible edge, backtracking on failure; the first solution in
/// that order is returned.
pub fn find_covering_induced_matching(g: &Graph, v: usize) -> Result<Option<Vec<EdgeId>>> {
    g.check_vertex(v)?;
    let targets = g.neighbors(v).to_vec();
    let mut chosen = Vec::new();
    if cover(g, v, &targets, &mut chosen) {
        Ok(Some(chosen))
    } else {
        Ok(None)
    }
}

fn cover(g: &Graph, v: usize, targets: &[usize], chosen: &mut Vec<EdgeId>) -> bool {
    let Some(pos) = targets
        .iter()
        .position(|&w| !chosen.iter().any(|e| e.contains(w)))
    else {
        return true;
    };
    let w = targets[pos];
    for e in g.incident_edges(w) {
        if e.contains(v) || !chosen.iter().all(|&f| g.edges_far_apart(e, f)) {
            continue;
        }
        chosen.push(e);
        if cover(g, v, &targets[pos + 1..], chosen) {
            return true;
        }
        chosen.pop();
    }
    false
}

/// A precolored induced matching of `G □ H` that cannot be extended: every
/// edge at the maximum-degree hub `(a, b)` touches an edge of color 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Claim9Instance {
    pub product: ProductGraph,
    pub precoloring: Precoloring,
    pub hub: usize,
    pub g_matching: Vec<EdgeId>,
    pub h_matching: Vec<EdgeId>,
}

/// First maximum-degree vertex whose neighborhood has a covering induced matching.
fn covered_hub(g: &Graph) -> Result<Option<(usize, Vec<EdgeId>)>> {
    let delta = g.max_degree();
    if delta == 0 {
        return Ok(None);
    }
    for v in (0..g.order()).filter(|&v| g.degree(v) == delta) {
        if let Some(matching) = find_covering_induced_matching(g, v)? {
            return Ok(Some((v, matching)));
        }
    }
    Ok(None)
}

pub fn build_claim9_instance(g: &Graph, h: &Graph) -> Result<Claim9Instance> {
    g.bipartition()?;
    h.bipartition()?;
    let (a, g_matching) = covered_hub(g)?.ok_or_else(|| {
        Error::Inapplicable(format!(
            "no maximum-degree vertex of {} has its neighborhood covered by an induced matching",
            name_or(g, "the left factor")
        ))
    })?;
    let (b, h_matching) = covered_hub(h)?.ok_or_else(|| {
        Error::Inapplicable(format!(
            "no maximum-degree vertex of {} has its neighborhood covered by an induced matching",
            name_or(h, "the right factor")
        ))
    })?;

    let product = cartesian_product(g, h)?;
    let palette = (g.max_degree() + h.max_degree()) as Color;
    let mut precoloring = Precoloring::new(palette);
    for &e in &g_matching {
        precoloring.insert(product.layer_edge(e, b), 1);
    }
    for &e in &h_matching {
        precoloring.insert(product.fiber_edge(a, e), 1);
    }
    let hub = product.vertex(a, b);

    let pg = product.graph();
    let invariant = |ok: bool, what: &str| {
        if ok {
            Ok(())
        } else {
            Err(Error::InternalProofInvariantViolated(what.to_string()))
        }
    };
    invariant(
        pg.degree(hub) == palette as usize && pg.max_degree() == palette as usize,
        "hub does not have maximum degree",
    )?;
    invariant(
        validate_precoloring(pg, &precoloring)?.is_valid(),
        "precolored edges are not an induced matching",
    )?;
    invariant(
        pg.incident_edges(hub)
            .all(|e| precoloring.edges().any(|f| f != e && f.shares_vertex(e))),
        "some hub edge is not adjacent to a precolored edge",
    )?;

    Ok(Claim9Instance {
        product,
        precoloring,
        hub,
        g_matching,
        h_matching,
    })
}

fn name_or<'a>(g: &'a Graph, fallback: &'a str) -> &'a str {
    if g.name().is_empty() {
        fallback
    } else {
        g.name()
    }
}

/// A vertex of full degree at which one color is blocked on every edge.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ObstructionCertificate {
    pub hub: usize,
    pub color: Color,
    /// Each edge at the hub with an adjacent precolored edge of `color`.
    pub witnesses: Vec<(EdgeId, EdgeId)>,
}

/// Looks for a vertex of degree equal to the palette size and a color that
/// no edge at it can take, because each of them touches a precolored edge of
/// that color. Such a vertex needs every color, so a certificate rules out
/// any extension.
pub fn check_local_obstruction(g: &Graph, pre: &Precoloring) -> Option<ObstructionCertificate> {
    let palette = pre.palette_size() as usize;
    for w in (0..g.order()).filter(|&w| palette > 0 && g.degree(w) == palette) {
        'colors: for color in 1..=pre.palette_size() {
            let mut witnesses = Vec::new();
            for e in g.incident_edges(w) {
                if pre.get(e) == Some(color) {
                    continue 'colors;
                }
                let witness = pre
                    .iter()
                    .find(|&(f, c)| c == color && f != e && f.shares_vertex(e));
                match witness {
                    Some((f, _)) => witnesses.push((e, f)),
                    None => continue 'colors,
                }
            }
            return Some(ObstructionCertificate {
                hub: w,
                color,
                witnesses,
            });
        }
    }
    None
}
