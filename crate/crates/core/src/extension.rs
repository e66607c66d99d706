//! Extending precolored induced matchings in `G □ K_{2m}`, `G □ Q_m`,
//! `G □ K_{1,m}` and `Q_d` to proper edge colorings with `χ'` colors.
//!
//! The `K_{2m}` case does the real work. Precolored layer edges are removed
//! from the base graph `G` and their colors struck from the lists of adjacent
//! base edges; a precolored fiber edge at `u` strikes its color from every
//! base edge at `u`. The remaining base graph is list-colored, the result is
//! copied into all `2m` layers, and each fiber `K_{2m}` is colored from the
//! `2m - 1` colors its base vertex leaves free.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::coloring::{
    bkw_list_color, one_factorization, verify_proper, Color, EdgeColoring, ListAssignment,
};
use crate::error::{Error, Result};
use crate::families::{
    cartesian_product, complete, hypercube, product_with_hypercube, EdgeKind, Family,
    ProductGraph, StarEmbedding,
};
use crate::graph::{EdgeId, Graph};

/// Palette size plus prescribed colors on some edges.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Precoloring {
    palette_size: Color,
    entries: BTreeMap<EdgeId, Color>,
}

impl Precoloring {
    pub fn new(palette_size: Color) -> Self {
        Precoloring {
            palette_size,
            entries: BTreeMap::new(),
        }
    }

    pub fn with_entries(palette_size: Color, entries: impl IntoIterator<Item = (EdgeId, Color)>) -> Self {
        Precoloring {
            palette_size,
            entries: entries.into_iter().collect(),
        }
    }

    pub fn palette_size(&self) -> Color {
        self.palette_size
    }

    pub fn insert(&mut self, e: EdgeId, c: Color) -> Option<Color> {
        self.entries.insert(e, c)
    }

    pub fn get(&self, e: EdgeId) -> Option<Color> {
        self.entries.get(&e).copied()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (EdgeId, Color)> + '_ {
        self.entries.iter().map(|(&e, &c)| (e, c))
    }

    pub fn edges(&self) -> impl Iterator<Item = EdgeId> + '_ {
        self.entries.keys().copied()
    }

    /// Precolored edges of `coloring` that do not carry their prescribed color.
    pub fn disagreements(&self, coloring: &EdgeColoring) -> Vec<(EdgeId, Color, Option<Color>)> {
        self.iter()
            .filter_map(|(e, c)| {
                let got = coloring.get(e);
                (got != Some(c)).then_some((e, c, got))
            })
            .collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PrecoloringViolation {
    ColorOutOfPalette { edge: EdgeId, color: Color },
    PaletteMismatch { expected: Color, found: Color },
    TooClose { first: EdgeId, second: EdgeId, distance: usize },
}

impl fmt::Display for PrecoloringViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PrecoloringViolation::ColorOutOfPalette { edge, color } => {
                write!(f, "edge {edge} has color {color} outside the palette")
            }
            PrecoloringViolation::PaletteMismatch { expected, found } => {
                write!(f, "palette size must be {expected}, found {found}")
            }
            PrecoloringViolation::TooClose {
                first,
                second,
                distance,
            } => write!(f, "edges {first} and {second} are at distance {distance}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct PrecoloringReport {
    pub violations: Vec<PrecoloringViolation>,
}

impl PrecoloringReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }

    fn into_result(self) -> Result<()> {
        if self.is_valid() {
            Ok(())
        } else {
            Err(Error::InvalidPrecoloring(self))
        }
    }
}

impl fmt::Display for PrecoloringReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_valid() {
            return f.write_str("valid");
        }
        let parts: Vec<String> = self.violations.iter().map(ToString::to_string).collect();
        f.write_str(&parts.join("; "))
    }
}

/// Checks that the precolored edges form a distance-2 matching in `g` with
/// colors in `1..=palette_size`.
pub fn validate_precoloring(g: &Graph, pre: &Precoloring) -> Result<PrecoloringReport> {
    for e in pre.edges() {
        g.check_edge(e)?;
    }
    let mut report = PrecoloringReport::default();
    for (e, c) in pre.iter() {
        if c == 0 || c > pre.palette_size() {
            report
                .violations
                .push(PrecoloringViolation::ColorOutOfPalette { edge: e, color: c });
        }
    }
    let edges: Vec<EdgeId> = pre.edges().collect();
    for (i, &e) in edges.iter().enumerate() {
        for &f in &edges[i + 1..] {
            if !g.edges_far_apart(e, f) {
                let distance = if e.shares_vertex(f) { 0 } else { 1 };
                report.violations.push(PrecoloringViolation::TooClose {
                    first: e,
                    second: f,
                    distance,
                });
            }
        }
    }
    Ok(report)
}

fn expect_palette(pre: &Precoloring, expected: Color) -> Result<()> {
    if pre.palette_size() == expected {
        Ok(())
    } else {
        Err(Error::InvalidPrecoloring(PrecoloringReport {
            violations: vec![PrecoloringViolation::PaletteMismatch {
                expected,
                found: pre.palette_size(),
            }],
        }))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LayerEntry {
    pub base: EdgeId,
    pub copy: usize,
    pub color: Color,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FiberEntry {
    pub base: usize,
    pub pair: EdgeId,
    pub color: Color,
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Classified {
    pub layer: Vec<LayerEntry>,
    pub fiber: Vec<FiberEntry>,
}

/// Splits the precolored product edges into layer and fiber entries.
pub fn classify_precolored(p: &ProductGraph, pre: &Precoloring) -> Result<Classified> {
    let mut out = Classified::default();
    for (e, color) in pre.iter() {
        match p.edge_kind(e).ok_or(Error::UnknownEdge(e))? {
            EdgeKind::Layer { base, right } => out.layer.push(LayerEntry {
                base,
                copy: right,
                color,
            }),
            EdgeKind::Fiber { base, right } => out.fiber.push(FiberEntry {
                base,
                pair: right,
                color,
            }),
        }
    }
    Ok(out)
}

/// The list-coloring problem left on the base graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReducedInstance {
    pub m: usize,
    pub palette_size: Color,
    /// Base graph minus the precolored layer edges.
    pub base_residual: Graph,
    pub lists: ListAssignment,
    /// Precolored layer edges, by base edge.
    pub forced_layer: BTreeMap<EdgeId, Color>,
    /// Precolored fiber edge at a base vertex: the `K_{2m}` pair and its color.
    pub fiber_prescriptions: BTreeMap<usize, (EdgeId, Color)>,
    /// Number of color deletions applied to each residual edge's list.
    pub losses: BTreeMap<EdgeId, usize>,
}

fn internal(msg: impl Into<String>) -> Error {
    Error::InternalProofInvariantViolated(msg.into())
}

fn check_m(m: usize) -> Result<()> {
    if m == 0 {
        Err(Error::BadParameter("m must be at least 1".into()))
    } else {
        Ok(())
    }
}

fn complete_palette(g: &Graph, m: usize) -> Color {
    (g.max_degree() + 2 * m - 1) as Color
}

/// Builds the reduced base instance for a precoloring of `g □ K_{2m}` with
/// palette `Δ(g) + 2m - 1`.
pub fn reduce(g: &Graph, m: usize, pre: &Precoloring) -> Result<ReducedInstance> {
    check_m(m)?;
    let product = cartesian_product(g, &complete(2 * m))?;
    reduce_on(g, &product, m, pre)
}

fn reduce_on(g: &Graph, product: &ProductGraph, m: usize, pre: &Precoloring) -> Result<ReducedInstance> {
    g.bipartition()?;
    let palette = complete_palette(g, m);
    expect_palette(pre, palette)?;
    validate_precoloring(product.graph(), pre)?.into_result()?;
    let classified = classify_precolored(product, pre)?;

    let mut forced_layer = BTreeMap::new();
    for entry in &classified.layer {
        if forced_layer.insert(entry.base, entry.color).is_some() {
            return Err(internal(format!(
                "base edge {} precolored in two layers",
                entry.base
            )));
        }
    }
    let mut fiber_prescriptions = BTreeMap::new();
    for entry in &classified.fiber {
        if fiber_prescriptions
            .insert(entry.base, (entry.pair, entry.color))
            .is_some()
        {
            return Err(internal(format!(
                "two precolored fiber edges at base vertex {}",
                entry.base
            )));
        }
    }

    let removed: Vec<EdgeId> = forced_layer.keys().copied().collect();
    let residual = g.without_edges(&removed);

    // Colors struck at each base vertex, one entry per deletion source.
    let mut struck: Vec<Vec<Color>> = vec![Vec::new(); g.order()];
    for (&e, &c) in &forced_layer {
        for v in e.endpoints() {
            struck[v].push(c);
        }
    }
    for (&u, &(_, c)) in &fiber_prescriptions {
        struck[u].push(c);
    }
    if let Some(v) = (0..g.order()).find(|&v| struck[v].len() > 1) {
        return Err(internal(format!(
            "base vertex {v} touched by {} precolored edges",
            struck[v].len()
        )));
    }

    let delta = g.max_degree();
    let mut lists = BTreeMap::new();
    let mut losses = BTreeMap::new();
    for &e in residual.edges() {
        let deleted: Vec<Color> = e.endpoints().iter().flat_map(|&v| struck[v].clone()).collect();
        let list: Vec<Color> = (1..=palette).filter(|c| !deleted.contains(c)).collect();
        if deleted.len() > 2 {
            return Err(internal(format!("edge {e} lost {} colors", deleted.len())));
        }
        if m == 1 && list.len() < delta {
            let both_reduced = e
                .endpoints()
                .iter()
                .all(|&v| removed.iter().any(|f| f.contains(v)));
            if !both_reduced {
                return Err(internal(format!(
                    "edge {e} has a short list but an endpoint keeps its full degree"
                )));
            }
        }
        let demand = residual.degree(e.lo()).max(residual.degree(e.hi()));
        if list.len() < demand {
            return Err(internal(format!(
                "edge {e} has {} colors for demand {demand}",
                list.len()
            )));
        }
        losses.insert(e, deleted.len());
        lists.insert(e, list);
    }
    let lists = ListAssignment::new(&residual, lists)?;

    Ok(ReducedInstance {
        m,
        palette_size: palette,
        base_residual: residual,
        lists,
        forced_layer,
        fiber_prescriptions,
        losses,
    })
}

/// Colors every fiber `K_{2m}` given a proper coloring of the whole base
/// graph. Returns only the fiber edges of `g □ K_{2m}`.
///
/// At each base vertex the prescribed color (if any) and then the smallest
/// free colors are used; the round-robin class holding the prescribed pair
/// gets the prescribed color and the other classes take the rest in order.
pub fn color_fibers(
    g: &Graph,
    m: usize,
    base_coloring: &EdgeColoring,
    fiber_prescriptions: &BTreeMap<usize, (EdgeId, Color)>,
) -> Result<EdgeColoring> {
    check_m(m)?;
    let order = 2 * m;
    let palette = base_coloring.palette_size();
    let classes = one_factorization(order)?;
    let need = order - 1;
    let mut out = EdgeColoring::new(palette);

    for u in 0..g.order() {
        let used = base_coloring.colors_at(g, u);
        let avail: Vec<Color> = (1..=palette).filter(|c| !used.contains(c)).collect();
        if avail.len() < need {
            return Err(internal(format!(
                "base vertex {u} leaves {} colors for {need} fiber classes",
                avail.len()
            )));
        }
        let prescribed = fiber_prescriptions.get(&u).copied();
        let mut class_colors: Vec<Option<Color>> = vec![None; classes.len()];
        let mut rest: Vec<Color> = avail.clone();
        if let Some((pair, c)) = prescribed {
            if !avail.contains(&c) {
                return Err(internal(format!(
                    "prescribed fiber color {c} is already used at base vertex {u}"
                )));
            }
            let class = classes
                .iter()
                .position(|cl| cl.contains(&pair))
                .ok_or_else(|| internal(format!("pair {pair} is not an edge of K{order}")))?;
            class_colors[class] = Some(c);
            rest.retain(|&d| d != c);
        }
        let mut rest = rest.into_iter();
        for slot in class_colors.iter_mut().filter(|s| s.is_none()) {
            *slot = rest.next();
        }
        for (class, color) in classes.iter().zip(class_colors) {
            let color = color.expect("enough free colors checked above");
            for &pair in class {
                out.insert(EdgeId::of(u * order + pair.lo(), u * order + pair.hi()), color);
            }
        }
    }
    Ok(out)
}

fn check_extension(g: &Graph, coloring: &EdgeColoring, pre: &Precoloring) -> Result<()> {
    let report = verify_proper(g, coloring, None)?;
    if !report.is_valid() {
        return Err(internal(format!("extension is not a proper coloring: {report}")));
    }
    if let Some((e, want, got)) = pre.disagreements(coloring).into_iter().next() {
        return Err(internal(format!(
            "precolored edge {e} should be {want}, got {got:?}"
        )));
    }
    Ok(())
}

/// Extends a precolored distance-2 matching of `g □ K_{2m}` (palette
/// `Δ(g) + 2m - 1`) to a proper coloring of the whole product.
pub fn extend_over_complete(g: &Graph, m: usize, pre: &Precoloring) -> Result<EdgeColoring> {
    check_m(m)?;
    g.bipartition()?;
    let product = cartesian_product(g, &complete(2 * m))?;
    let reduced = reduce_on(g, &product, m, pre)?;
    let palette = reduced.palette_size;

    let residual_coloring = bkw_list_color(&reduced.base_residual, &reduced.lists)?;
    let mut base = EdgeColoring::new(palette);
    for (e, c) in residual_coloring.iter() {
        base.insert(e, c);
    }
    for (&e, &c) in &reduced.forced_layer {
        base.insert(e, c);
    }
    let base_report = verify_proper(g, &base, None)?;
    if !base_report.is_valid() {
        return Err(internal(format!("base coloring is improper: {base_report}")));
    }

    let mut out = EdgeColoring::new(palette);
    for (e, c) in base.iter() {
        for copy in 0..2 * m {
            out.insert(product.layer_edge(e, copy), c);
        }
    }
    for (e, c) in color_fibers(g, m, &base, &reduced.fiber_prescriptions)?.iter() {
        out.insert(e, c);
    }
    check_extension(product.graph(), &out, pre)?;
    Ok(out)
}

/// Extends a precolored distance-2 matching of `g □ Q_m` (palette
/// `Δ(g) + m`), treating the product as `(g □ Q_{m-1}) □ K_2`.
pub fn extend_over_hypercube(g: &Graph, m: usize, pre: &Precoloring) -> Result<EdgeColoring> {
    check_m(m)?;
    g.bipartition()?;
    let product = product_with_hypercube(g, m)?;
    expect_palette(pre, (g.max_degree() + m) as Color)?;
    validate_precoloring(product.graph(), pre)?.into_result()?;

    // Splitting on the last bit keeps every vertex index, so the precoloring
    // carries over unchanged.
    let base = product_with_hypercube(g, m - 1)?.into_graph();
    let out = extend_over_complete(&base, 1, pre)?;
    check_extension(product.graph(), &out, pre)?;
    Ok(out)
}

/// Extends a precolored induced matching of `Q_d` to a proper `d`-edge coloring.
pub fn extend_hypercube(d: usize, pre: &Precoloring) -> Result<EdgeColoring> {
    if d == 0 {
        return Err(Error::BadParameter("hypercube dimension must be at least 1".into()));
    }
    if d >= usize::BITS as usize - 1 {
        return Err(Error::BadParameter("hypercube dimension too large".into()));
    }
    extend_over_complete(&hypercube(d - 1), 1, pre)
}

/// Extends a precolored distance-2 matching of `g □ K_{1,m}` (palette
/// `Δ(g) + m`) by embedding the star into `Q_m` and restricting a coloring
/// of `g □ Q_m`.
pub fn extend_over_star(g: &Graph, m: usize, pre: &Precoloring) -> Result<EdgeColoring> {
    check_m(m)?;
    g.bipartition()?;
    let product = cartesian_product(g, &Family::Star(m).build()?)?;
    let palette = (g.max_degree() + m) as Color;
    expect_palette(pre, palette)?;
    validate_precoloring(product.graph(), pre)?.into_result()?;

    let embedding = StarEmbedding::new(m)?;
    let cube_product = product_with_hypercube(g, m)?;
    let map_vertex = |v: usize| {
        let (u, s) = product.factors(v);
        cube_product.vertex(u, embedding.map(s))
    };
    let map_edge = |e: EdgeId| EdgeId::of(map_vertex(e.lo()), map_vertex(e.hi()));

    let mapped = Precoloring::with_entries(palette, pre.iter().map(|(e, c)| (map_edge(e), c)));
    let mapped_report = validate_precoloring(cube_product.graph(), &mapped)?;
    if !mapped_report.is_valid() {
        return Err(internal(format!(
            "embedded precoloring is no longer an induced matching: {mapped_report}"
        )));
    }
    let cube_coloring = extend_over_hypercube(g, m, &mapped)?;

    let mut out = EdgeColoring::new(palette);
    for &e in product.graph().edges() {
        let c = cube_coloring
            .get(map_edge(e))
            .ok_or_else(|| internal(format!("edge {e} has no image in the hypercube product")))?;
        out.insert(e, c);
    }
    check_extension(product.graph(), &out, pre)?;
    Ok(out)
}

/// Checks that every layer copy of each base edge carries the same color.
pub fn layers_agree(product: &ProductGraph, coloring: &EdgeColoring) -> bool {
    let mut seen: BTreeMap<EdgeId, BTreeSet<Color>> = BTreeMap::new();
    for (&e, kind) in product.graph().edges().iter().zip(product.edge_kinds()) {
        if let EdgeKind::Layer { base, .. } = kind {
            if let Some(c) = coloring.get(e) {
                seen.entry(*base).or_default().insert(c);
            }
        }
    }
    seen.values().all(|s| s.len() == 1)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(n: usize) -> Graph {
        Family::Path(n).build().unwrap()
    }

    /// Product vertex `(u, a_i)` of `g □ K_{2m}`, with `i` 1-based.
    fn pv(m: usize, u: usize, i: usize) -> usize {
        u * 2 * m + (i - 1)
    }

    #[test]
    fn validate_examples() {
        let q3 = hypercube(3);
        let empty = Precoloring::new(3);
        assert!(validate_precoloring(&q3, &empty).unwrap().is_valid());

        let far = Precoloring::with_entries(3, [(EdgeId::of(0, 1), 1), (EdgeId::of(6, 7), 1)]);
        assert!(validate_precoloring(&q3, &far).unwrap().is_valid());

        let touching = Precoloring::with_entries(3, [(EdgeId::of(0, 1), 1), (EdgeId::of(1, 3), 2)]);
        let report = validate_precoloring(&q3, &touching).unwrap();
        assert_eq!(
            report.violations,
            vec![PrecoloringViolation::TooClose {
                first: EdgeId::of(0, 1),
                second: EdgeId::of(1, 3),
                distance: 0
            }]
        );

        let out_of_palette = Precoloring::with_entries(3, [(EdgeId::of(0, 1), 4)]);
        assert!(!validate_precoloring(&q3, &out_of_palette).unwrap().is_valid());

        let unknown = Precoloring::with_entries(3, [(EdgeId::of(0, 7), 1)]);
        assert!(matches!(
            validate_precoloring(&q3, &unknown),
            Err(Error::UnknownEdge(_))
        ));
    }

    #[test]
    fn classify_examples() {
        let g = path(2);
        let p = cartesian_product(&g, &complete(2)).unwrap();
        let layer = EdgeId::of(pv(1, 0, 1), pv(1, 1, 1));
        let fiber = EdgeId::of(pv(1, 0, 1), pv(1, 0, 2));

        let c = classify_precolored(&p, &Precoloring::with_entries(3, [(layer, 3)])).unwrap();
        assert_eq!(
            c.layer,
            vec![LayerEntry {
                base: EdgeId::of(0, 1),
                copy: 0,
                color: 3
            }]
        );
        let c = classify_precolored(&p, &Precoloring::with_entries(3, [(fiber, 2)])).unwrap();
        assert_eq!(
            c.fiber,
            vec![FiberEntry {
                base: 0,
                pair: EdgeId::of(0, 1),
                color: 2
            }]
        );

        let p3 = cartesian_product(&path(3), &complete(2)).unwrap();
        let mixed = Precoloring::with_entries(
            3,
            [
                (EdgeId::of(pv(1, 0, 1), pv(1, 1, 1)), 1),
                (EdgeId::of(pv(1, 2, 1), pv(1, 2, 2)), 2),
            ],
        );
        let c = classify_precolored(&p3, &mixed).unwrap();
        assert_eq!((c.layer.len(), c.fiber.len()), (1, 1));
    }

    #[test]
    fn reduce_p3_single_layer_edge() {
        let g = path(3);
        let pre = Precoloring::with_entries(3, [(EdgeId::of(pv(1, 0, 1), pv(1, 1, 1)), 3)]);
        let r = reduce(&g, 1, &pre).unwrap();
        assert_eq!(r.base_residual.edges(), &[EdgeId::of(1, 2)]);
        assert_eq!(r.lists.list(EdgeId::of(1, 2)).unwrap(), &[1, 2]);
        assert_eq!(r.forced_layer, BTreeMap::from([(EdgeId::of(0, 1), 3)]));
    }

    #[test]
    fn reduce_without_precoloring_is_identity() {
        let g = Family::CompleteBipartite(2, 3).build().unwrap();
        let r = reduce(&g, 2, &Precoloring::new(6)).unwrap();
        assert_eq!(r.base_residual.edges(), g.edges());
        assert!(r.lists.iter().all(|(_, l)| l == [1, 2, 3, 4, 5, 6]));
        assert!(r.forced_layer.is_empty() && r.fiber_prescriptions.is_empty());
    }

    #[test]
    fn reduce_p5_straddled_edge() {
        // Layer edges 0-1 in copy 1 and 2-3 in copy 2 straddle base edge 1-2.
        let g = path(5);
        let pre = Precoloring::with_entries(
            3,
            [
                (EdgeId::of(pv(1, 0, 1), pv(1, 1, 1)), 1),
                (EdgeId::of(pv(1, 2, 2), pv(1, 3, 2)), 2),
            ],
        );
        let r = reduce(&g, 1, &pre).unwrap();
        let e = EdgeId::of(1, 2);
        assert_eq!(r.lists.list(e).unwrap(), &[3]);
        assert_eq!(r.losses[&e], 2);
        assert_eq!(r.base_residual.degree(1), 1);
        assert_eq!(r.base_residual.degree(2), 1);
        assert!(r.lists.demand(e).unwrap() <= 1);
    }

    #[test]
    fn reduce_rejects_wrong_palette_and_close_edges() {
        let g = path(3);
        let pre = Precoloring::new(4);
        assert!(matches!(reduce(&g, 1, &pre), Err(Error::InvalidPrecoloring(_))));
        let close = Precoloring::with_entries(
            3,
            [
                (EdgeId::of(pv(1, 0, 1), pv(1, 1, 1)), 1),
                (EdgeId::of(pv(1, 1, 2), pv(1, 2, 2)), 2),
            ],
        );
        assert!(matches!(reduce(&g, 1, &close), Err(Error::InvalidPrecoloring(_))));
    }

    #[test]
    fn fibers_for_p3_example() {
        let g = path(3);
        let mut base = EdgeColoring::new(3);
        base.insert(EdgeId::of(0, 1), 3);
        base.insert(EdgeId::of(1, 2), 1);
        let fibers = color_fibers(&g, 1, &base, &BTreeMap::new()).unwrap();
        assert_eq!(fibers.get(EdgeId::of(pv(1, 0, 1), pv(1, 0, 2))), Some(1));
        assert_eq!(fibers.get(EdgeId::of(pv(1, 1, 1), pv(1, 1, 2))), Some(2));
        assert_eq!(fibers.get(EdgeId::of(pv(1, 2, 1), pv(1, 2, 2))), Some(2));
    }

    #[test]
    fn fibers_pin_the_prescribed_class() {
        // K_2 base, m = 2: palette 4, base edge colored 1, prescription on
        // the pair {a_1, a_3} at vertex 0.
        let g = path(2);
        let mut base = EdgeColoring::new(4);
        base.insert(EdgeId::of(0, 1), 1);
        let pair = EdgeId::of(0, 2);
        let prescriptions = BTreeMap::from([(0, (pair, 4))]);
        let fibers = color_fibers(&g, 2, &base, &prescriptions).unwrap();
        let classes = one_factorization(4).unwrap();
        let class = classes.iter().find(|c| c.contains(&pair)).unwrap();
        for &p in class {
            assert_eq!(fibers.get(EdgeId::of(p.lo(), p.hi())), Some(4));
        }
        assert_eq!(fibers.distinct_colors(), BTreeSet::from([2, 3, 4]));
    }

    #[test]
    fn fibers_reject_unavailable_prescription() {
        let g = path(2);
        let mut base = EdgeColoring::new(2);
        base.insert(EdgeId::of(0, 1), 1);
        let prescriptions = BTreeMap::from([(0, (EdgeId::of(0, 1), 1))]);
        assert!(matches!(
            color_fibers(&g, 1, &base, &prescriptions),
            Err(Error::InternalProofInvariantViolated(_))
        ));
    }

    #[test]
    fn extend_p3_ladder() {
        let g = path(3);
        let e = EdgeId::of(pv(1, 0, 1), pv(1, 1, 1));
        let pre = Precoloring::with_entries(3, [(e, 3)]);
        let col = extend_over_complete(&g, 1, &pre).unwrap();
        assert_eq!(col.len(), 7);
        assert_eq!(col.get(e), Some(3));
        assert_eq!(col.get(EdgeId::of(pv(1, 1, 1), pv(1, 1, 2))), Some(2));
    }

    #[test]
    fn extend_empty_over_k4() {
        let g = Family::CompleteBipartite(2, 3).build().unwrap();
        let palette = complete_palette(&g, 2);
        let col = extend_over_complete(&g, 2, &Precoloring::new(palette)).unwrap();
        let product = cartesian_product(&g, &complete(4)).unwrap();
        assert!(verify_proper(product.graph(), &col, None).unwrap().is_valid());
        assert!(layers_agree(&product, &col));
        assert!(col.distinct_colors().iter().all(|&c| c <= palette));
    }

    #[test]
    fn extend_k2_times_k4_fiber_prescription() {
        let g = path(2);
        let e = EdgeId::of(pv(2, 0, 1), pv(2, 0, 2));
        let col = extend_over_complete(&g, 2, &Precoloring::with_entries(4, [(e, 4)])).unwrap();
        assert_eq!(col.get(e), Some(4));
    }

    #[test]
    fn extend_rejects_non_bipartite_base() {
        let c3 = Family::Cycle(3).build().unwrap();
        assert!(matches!(
            extend_over_complete(&c3, 1, &Precoloring::new(3)),
            Err(Error::NotBipartite { .. })
        ));
    }

    #[test]
    fn hypercube_two_far_edges_same_color() {
        let pre = Precoloring::with_entries(3, [(EdgeId::of(0, 1), 1), (EdgeId::of(6, 7), 1)]);
        let col = extend_hypercube(3, &pre).unwrap();
        assert!(verify_proper(&hypercube(3), &col, None).unwrap().is_valid());
        assert_eq!(col.get(EdgeId::of(6, 7)), Some(1));
    }

    #[test]
    fn q2_alternates() {
        let pre = Precoloring::with_entries(2, [(EdgeId::of(0, 1), 2)]);
        let col = extend_hypercube(2, &pre).unwrap();
        assert_eq!(col.get(EdgeId::of(0, 1)), Some(2));
        assert_eq!(col.get(EdgeId::of(2, 3)), Some(2));
        assert_eq!(col.get(EdgeId::of(0, 2)), Some(1));
    }

    #[test]
    fn hypercube_product_m1_matches_complete() {
        let g = path(3);
        let pre = Precoloring::with_entries(3, [(EdgeId::of(pv(1, 0, 1), pv(1, 1, 1)), 3)]);
        assert_eq!(
            extend_over_hypercube(&g, 1, &pre).unwrap(),
            extend_over_complete(&g, 1, &pre).unwrap()
        );
    }

    #[test]
    fn star_product_m1_matches_complete() {
        let g = path(3);
        let pre = Precoloring::with_entries(3, [(EdgeId::of(pv(1, 0, 1), pv(1, 1, 1)), 3)]);
        assert_eq!(
            extend_over_star(&g, 1, &pre).unwrap(),
            extend_over_complete(&g, 1, &pre).unwrap()
        );
    }

    #[test]
    fn star_product_p3_m2() {
        let g = path(3);
        let product = cartesian_product(&g, &Family::Star(2).build().unwrap()).unwrap();
        let e = product.layer_edge(EdgeId::of(0, 1), 2);
        let pre = Precoloring::with_entries(4, [(e, 4)]);
        let col = extend_over_star(&g, 2, &pre).unwrap();
        assert!(verify_proper(product.graph(), &col, None).unwrap().is_valid());
        assert_eq!(col.get(e), Some(4));
    }
}
