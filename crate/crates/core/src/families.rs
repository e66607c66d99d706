//! Standard graph families and the Cartesian product.
//!
//! Product vertex `(u, w)` of `G □ H` always has index `u * |V(H)| + w`.
//! With hypercube vertices numbered by their bitstrings (most significant
//! bit first), this makes `Q_d □ K_2` and `Q_{d+1}` identical graphs, and
//! `G □ Q_m` identical to `(G □ Q_{m-1}) □ K_2`.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::{EdgeId, Graph};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    Complete(usize),
    CompleteBipartite(usize, usize),
    /// `K_{1,m}`: center 0, leaves `1..=m`.
    Star(usize),
    Path(usize),
    Cycle(usize),
    Hypercube(usize),
    /// Center 0 with `legs` paths of `leg_length` vertices hanging off it.
    Spider { legs: usize, leg_length: usize },
}

impl Family {
    pub fn build(self) -> Result<Graph> {
        let bad = |what: &str| Err(Error::BadParameter(format!("{self}: {what}")));
        match self {
            Family::Complete(n) => {
                if n < 1 {
                    return bad("need n >= 1");
                }
                Ok(complete(n))
            }
            Family::CompleteBipartite(a, b) => {
                if a < 1 || b < 1 {
                    return bad("need both sides >= 1");
                }
                let pairs: Vec<_> = (0..a)
                    .flat_map(|i| (0..b).map(move |j| (i, a + j)))
                    .collect();
                Ok(Graph::unlabeled(a + b, &pairs)?.with_name(self.to_string()))
            }
            Family::Star(m) => {
                if m < 1 {
                    return bad("need m >= 1");
                }
                let pairs: Vec<_> = (1..=m).map(|t| (0, t)).collect();
                Ok(Graph::unlabeled(m + 1, &pairs)?.with_name(self.to_string()))
            }
            Family::Path(n) => {
                if n < 1 {
                    return bad("need n >= 1");
                }
                let pairs: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
                Ok(Graph::unlabeled(n, &pairs)?.with_name(self.to_string()))
            }
            Family::Cycle(n) => {
                if n < 3 {
                    return bad("need n >= 3");
                }
                let pairs: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
                Ok(Graph::unlabeled(n, &pairs)?.with_name(self.to_string()))
            }
            Family::Hypercube(d) => {
                if d >= usize::BITS as usize - 1 {
                    return bad("dimension too large");
                }
                Ok(hypercube(d))
            }
            Family::Spider { legs, leg_length } => {
                if legs < 1 || leg_length < 1 {
                    return bad("need legs >= 1 and leg_length >= 1");
                }
                let mut labels = vec!["c".to_string()];
                let mut pairs = Vec::new();
                for leg in 0..legs {
                    let mut prev = 0;
                    for step in 0..leg_length {
                        let v = labels.len();
                        labels.push(format!("l{}_{}", leg + 1, step + 1));
                        pairs.push((prev, v));
                        prev = v;
                    }
                }
                Ok(Graph::new(labels, &pairs)?.with_name(self.to_string()))
            }
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Family::Complete(n) => write!(f, "K{n}"),
            Family::CompleteBipartite(a, b) => write!(f, "K{a},{b}"),
            Family::Star(m) => write!(f, "K1,{m}"),
            Family::Path(n) => write!(f, "P{n}"),
            Family::Cycle(n) => write!(f, "C{n}"),
            Family::Hypercube(d) => write!(f, "Q{d}"),
            Family::Spider { legs, leg_length } => write!(f, "spider{legs},{leg_length}"),
        }
    }
}

/// Parses `kind:params`, e.g. `hypercube:3`, `spider:3,2`, `complete_bipartite:2,3`.
impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::BadParameter(format!("unrecognized family `{s}`"));
        let (kind, params) = s.split_once(':').ok_or_else(bad)?;
        let nums = params
            .split(',')
            .map(|p| p.trim().parse::<usize>())
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(|_| bad())?;
        let family = match (kind.trim(), nums.as_slice()) {
            ("complete", &[n]) => Family::Complete(n),
            ("complete_bipartite", &[a, b]) => Family::CompleteBipartite(a, b),
            ("star", &[m]) => Family::Star(m),
            ("path", &[n]) => Family::Path(n),
            ("cycle", &[n]) => Family::Cycle(n),
            ("hypercube", &[d]) => Family::Hypercube(d),
            ("spider", &[legs, leg_length]) => Family::Spider { legs, leg_length },
            _ => return Err(bad()),
        };
        Ok(family)
    }
}

pub fn complete(n: usize) -> Graph {
    let pairs: Vec<_> = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .collect();
    let labels: Vec<String> = (1..=n).map(|i| format!("a{i}")).collect();
    Graph::new(labels, &pairs)
        .expect("complete graph")
        .with_name(format!("K{n}"))
}

/// `d`-bit string of `v`, most significant bit first.
pub fn bitstring(v: usize, d: usize) -> String {
    (0..d)
        .rev()
        .map(|bit| if v >> bit & 1 == 1 { '1' } else { '0' })
        .collect()
}

pub fn hypercube(d: usize) -> Graph {
    let n = 1usize << d;
    let pairs: Vec<_> = (0..n)
        .flat_map(|v| (0..d).map(move |bit| (v, v ^ (1 << bit))))
        .filter(|&(v, w)| v < w)
        .collect();
    let labels: Vec<String> = (0..n).map(|v| bitstring(v, d)).collect();
    Graph::new(labels, &pairs)
        .expect("hypercube")
        .with_name(format!("Q{d}"))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum EdgeKind {
    /// Copy of base edge `base` inside the layer of right vertex `right`.
    Layer { base: EdgeId, right: usize },
    /// Copy of right-factor edge `right` inside the fiber of base vertex `base`.
    Fiber { base: usize, right: EdgeId },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProductGraph {
    graph: Graph,
    left_order: usize,
    right_order: usize,
    edge_kinds: Vec<EdgeKind>,
}

impl ProductGraph {
    /// Reassembles a product from a graph and its stored metadata, checking
    /// that every kind matches its edge.
    pub fn from_parts(
        graph: Graph,
        left_order: usize,
        right_order: usize,
        edge_kinds: Vec<EdgeKind>,
    ) -> Result<Self> {
        let p = ProductGraph {
            graph,
            left_order,
            right_order,
            edge_kinds,
        };
        if right_order == 0 || p.graph.order() != left_order * right_order {
            return Err(Error::Format(format!(
                "product of orders {left_order} and {right_order} cannot have {} vertices",
                p.graph.order()
            )));
        }
        if p.edge_kinds.len() != p.graph.size() {
            return Err(Error::Format("edge kind count differs from edge count".into()));
        }
        for (&e, &kind) in p.graph.edges().iter().zip(&p.edge_kinds) {
            if p.classify(e) != kind {
                return Err(Error::Format(format!("edge {e} has wrong kind {kind:?}")));
            }
        }
        Ok(p)
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn into_graph(self) -> Graph {
        self.graph
    }

    pub fn left_order(&self) -> usize {
        self.left_order
    }

    pub fn right_order(&self) -> usize {
        self.right_order
    }

    pub fn vertex(&self, u: usize, w: usize) -> usize {
        u * self.right_order + w
    }

    /// `(u, w)` for product vertex `v`.
    pub fn factors(&self, v: usize) -> (usize, usize) {
        (v / self.right_order, v % self.right_order)
    }

    /// Kinds aligned with `graph().edges()`.
    pub fn edge_kinds(&self) -> &[EdgeKind] {
        &self.edge_kinds
    }

    pub fn edge_kind(&self, e: EdgeId) -> Option<EdgeKind> {
        self.graph.edge_index(e).map(|i| self.edge_kinds[i])
    }

    pub fn layer_edge(&self, base: EdgeId, right: usize) -> EdgeId {
        EdgeId::of(self.vertex(base.lo(), right), self.vertex(base.hi(), right))
    }

    pub fn fiber_edge(&self, base: usize, right: EdgeId) -> EdgeId {
        EdgeId::of(self.vertex(base, right.lo()), self.vertex(base, right.hi()))
    }

    fn classify(&self, e: EdgeId) -> EdgeKind {
        let (u1, w1) = self.factors(e.lo());
        let (u2, w2) = self.factors(e.hi());
        if u1 == u2 {
            EdgeKind::Fiber {
                base: u1,
                right: EdgeId::of(w1, w2),
            }
        } else {
            EdgeKind::Layer {
                base: EdgeId::of(u1, u2),
                right: w1,
            }
        }
    }
}

/// `g □ h` with vertex `(u, w)` at index `u * |V(h)| + w`, labeled `"u|w"`
/// from the factor labels.
pub fn cartesian_product(g: &Graph, h: &Graph) -> Result<ProductGraph> {
    if g.order() == 0 || h.order() == 0 {
        return Err(Error::BadParameter("product factors must be nonempty".into()));
    }
    let k = h.order();
    let mut labels = Vec::with_capacity(g.order() * k);
    for u in 0..g.order() {
        for w in 0..k {
            labels.push(format!("{}|{}", g.label(u), h.label(w)));
        }
    }
    let mut pairs = Vec::with_capacity(g.size() * k + h.size() * g.order());
    for e in g.edges() {
        for w in 0..k {
            pairs.push((e.lo() * k + w, e.hi() * k + w));
        }
    }
    for u in 0..g.order() {
        for f in h.edges() {
            pairs.push((u * k + f.lo(), u * k + f.hi()));
        }
    }
    let graph = Graph::new(labels, &pairs)?.with_name(format!("{}x{}", g.name(), h.name()));
    let mut product = ProductGraph {
        graph,
        left_order: g.order(),
        right_order: k,
        edge_kinds: Vec::new(),
    };
    product.edge_kinds = product
        .graph
        .edges()
        .iter()
        .map(|&e| product.classify(e))
        .collect();
    Ok(product)
}

/// `g □ Q_m`. Vertex numbering coincides with `m` iterated products with `K_2`.
pub fn product_with_hypercube(g: &Graph, m: usize) -> Result<ProductGraph> {
    if m >= usize::BITS as usize - 1 {
        return Err(Error::BadParameter("hypercube dimension too large".into()));
    }
    cartesian_product(g, &hypercube(m))
}

/// Canonical embedding of `K_{1,m}` (as built by [`Family::Star`]) into `Q_m`:
/// the center goes to `0^m`, leaf `t` to the unit string with bit `t` set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StarEmbedding {
    m: usize,
    vertex_map: Vec<usize>,
}

impl StarEmbedding {
    pub fn new(m: usize) -> Result<Self> {
        if m < 1 {
            return Err(Error::BadParameter("star embedding needs m >= 1".into()));
        }
        if m >= usize::BITS as usize - 1 {
            return Err(Error::BadParameter("star too large for a hypercube".into()));
        }
        // Bit position t counts from the left of the string.
        let vertex_map = std::iter::once(0)
            .chain((1..=m).map(|t| 1usize << (m - t)))
            .collect();
        Ok(StarEmbedding { m, vertex_map })
    }

    pub fn m(&self) -> usize {
        self.m
    }

    /// Hypercube vertex for star vertex `s` (0 is the center).
    pub fn map(&self, s: usize) -> usize {
        self.vertex_map[s]
    }

    pub fn vertex_map(&self) -> &[usize] {
        &self.vertex_map
    }

    pub fn map_edge(&self, e: EdgeId) -> EdgeId {
        EdgeId::of(self.map(e.lo()), self.map(e.hi()))
    }

    /// Hypercube edges with both endpoints in the image.
    pub fn induced_edges(&self, cube: &Graph) -> Vec<EdgeId> {
        cube.edges()
            .iter()
            .copied()
            .filter(|e| self.vertex_map.contains(&e.lo()) && self.vertex_map.contains(&e.hi()))
            .collect()
    }
}
