//! Immutable simple undirected graphs.
//!
//! Vertices are dense indices `0..n` carrying text labels. Edges are stored
//! as canonical pairs in lexicographic order, so two graphs built from the
//! same input are identical down to adjacency ordering.

use std::collections::{HashMap, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Canonical unordered vertex pair `(lo, hi)` with `lo < hi`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct EdgeId(usize, usize);

impl EdgeId {
    pub fn new(a: usize, b: usize) -> Result<Self> {
        match a.cmp(&b) {
            std::cmp::Ordering::Less => Ok(EdgeId(a, b)),
            std::cmp::Ordering::Greater => Ok(EdgeId(b, a)),
            std::cmp::Ordering::Equal => Err(Error::SelfLoop(a)),
        }
    }

    /// Like [`EdgeId::new`] but panics on `a == b`.
    pub fn of(a: usize, b: usize) -> Self {
        assert_ne!(a, b, "self-loop");
        EdgeId(a.min(b), a.max(b))
    }

    pub fn lo(self) -> usize {
        self.0
    }

    pub fn hi(self) -> usize {
        self.1
    }

    pub fn endpoints(self) -> [usize; 2] {
        [self.0, self.1]
    }

    pub fn contains(self, v: usize) -> bool {
        self.0 == v || self.1 == v
    }

    pub fn shares_vertex(self, other: EdgeId) -> bool {
        self.contains(other.0) || self.contains(other.1)
    }

    /// The endpoint that is not `v`.
    pub fn other(self, v: usize) -> usize {
        if self.0 == v {
            self.1
        } else {
            self.0
        }
    }
}

impl fmt::Display for EdgeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.0, self.1)
    }
}

/// Shortest-path length, with disconnected pairs kept distinct from any
/// finite value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Distance {
    Finite(usize),
    Infinite,
}

impl Distance {
    pub fn finite(self) -> Option<usize> {
        match self {
            Distance::Finite(d) => Some(d),
            Distance::Infinite => None,
        }
    }
}

impl fmt::Display for Distance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Distance::Finite(d) => write!(f, "{d}"),
            Distance::Infinite => f.write_str("inf"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Side {
    X,
    Y,
}

/// Two-sided vertex partition; the lowest-index vertex of every connected
/// component is on side `X`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Bipartition {
    side: Vec<Side>,
}

impl Bipartition {
    pub fn side(&self, v: usize) -> Side {
        self.side[v]
    }

    pub fn is_x(&self, v: usize) -> bool {
        self.side[v] == Side::X
    }

    pub fn sides(&self) -> &[Side] {
        &self.side
    }

    /// Orders an edge's endpoints as `(x, y)`.
    pub fn orient(&self, e: EdgeId) -> (usize, usize) {
        if self.is_x(e.lo()) {
            (e.lo(), e.hi())
        } else {
            (e.hi(), e.lo())
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    name: String,
    labels: Vec<String>,
    edges: Vec<EdgeId>,
    adjacency: Vec<Vec<usize>>,
    index: HashMap<EdgeId, usize>,
}

impl Graph {
    pub fn new<S: Into<String>>(labels: Vec<S>, pairs: &[(usize, usize)]) -> Result<Self> {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        let order = labels.len();
        let mut edges = Vec::with_capacity(pairs.len());
        for &(a, b) in pairs {
            for v in [a, b] {
                if v >= order {
                    return Err(Error::IndexOutOfRange { index: v, order });
                }
            }
            edges.push(EdgeId::new(a, b)?);
        }
        edges.sort_unstable();
        if let Some(w) = edges.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateEdge(w[0]));
        }
        let mut adjacency = vec![Vec::new(); order];
        for e in &edges {
            adjacency[e.lo()].push(e.hi());
            adjacency[e.hi()].push(e.lo());
        }
        for nbrs in &mut adjacency {
            nbrs.sort_unstable();
        }
        let index = edges.iter().enumerate().map(|(i, &e)| (e, i)).collect();
        Ok(Graph {
            name: String::new(),
            labels,
            edges,
            adjacency,
            index,
        })
    }

    /// Graph with vertices labeled by their indices.
    pub fn unlabeled(order: usize, pairs: &[(usize, usize)]) -> Result<Self> {
        Graph::new((0..order).map(|v| v.to_string()).collect(), pairs)
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn order(&self) -> usize {
        self.labels.len()
    }

    pub fn size(&self) -> usize {
        self.edges.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, v: usize) -> &str {
        &self.labels[v]
    }

    /// Edges in lexicographic order.
    pub fn edges(&self) -> &[EdgeId] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adjacency.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn has_edge(&self, e: EdgeId) -> bool {
        self.index.contains_key(&e)
    }

    pub fn is_adjacent(&self, u: usize, v: usize) -> bool {
        u != v && self.has_edge(EdgeId::of(u, v))
    }

    /// Position of `e` in [`Graph::edges`].
    pub fn edge_index(&self, e: EdgeId) -> Option<usize> {
        self.index.get(&e).copied()
    }

    /// Edges at `v`, in neighbor order.
    pub fn incident_edges(&self, v: usize) -> impl Iterator<Item = EdgeId> + '_ {
        self.adjacency[v].iter().map(move |&w| EdgeId::of(v, w))
    }

    pub(crate) fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.order() {
            Ok(())
        } else {
            Err(Error::IndexOutOfRange {
                index: v,
                order: self.order(),
            })
        }
    }

    pub(crate) fn check_edge(&self, e: EdgeId) -> Result<()> {
        if self.has_edge(e) {
            Ok(())
        } else {
            Err(Error::UnknownEdge(e))
        }
    }

    /// Copy of this graph without the given edges (same vertices and labels).
    pub fn without_edges(&self, removed: &[EdgeId]) -> Graph {
        let pairs: Vec<(usize, usize)> = self
            .edges
            .iter()
            .filter(|e| !removed.contains(e))
            .map(|e| (e.lo(), e.hi()))
            .collect();
        Graph::new(self.labels.clone(), &pairs)
            .expect("subgraph of a valid graph")
            .with_name(self.name.clone())
    }

    pub fn bipartition(&self) -> Result<Bipartition> {
        let n = self.order();
        let mut side: Vec<Option<Side>> = vec![None; n];
        let mut parent = vec![usize::MAX; n];
        for root in 0..n {
            if side[root].is_some() {
                continue;
            }
            side[root] = Some(Side::X);
            let mut queue = VecDeque::from([root]);
            while let Some(u) = queue.pop_front() {
                let su = side[u].unwrap();
                for &w in &self.adjacency[u] {
                    match side[w] {
                        None => {
                            side[w] = Some(if su == Side::X { Side::Y } else { Side::X });
                            parent[w] = u;
                            queue.push_back(w);
                        }
                        Some(sw) if sw == su => {
                            return Err(Error::NotBipartite {
                                cycle: odd_cycle(&parent, u, w),
                            });
                        }
                        Some(_) => {}
                    }
                }
            }
        }
        Ok(Bipartition {
            side: side.into_iter().map(Option::unwrap).collect(),
        })
    }

    pub fn is_bipartite(&self) -> bool {
        self.bipartition().is_ok()
    }

    /// BFS distances from `source` to every vertex.
    pub fn distances_from(&self, source: usize) -> Vec<Distance> {
        let mut dist = vec![Distance::Infinite; self.order()];
        dist[source] = Distance::Finite(0);
        let mut queue = VecDeque::from([source]);
        while let Some(u) = queue.pop_front() {
            let Distance::Finite(du) = dist[u] else {
                unreachable!()
            };
            for &w in &self.adjacency[u] {
                if dist[w] == Distance::Infinite {
                    dist[w] = Distance::Finite(du + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    pub fn vertex_distance(&self, u: usize, v: usize) -> Result<Distance> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        Ok(self.distances_from(u)[v])
    }

    /// Minimum vertex distance over the four endpoint pairs of `e` and `f`.
    pub fn edge_distance(&self, e: EdgeId, f: EdgeId) -> Result<Distance> {
        self.check_edge(e)?;
        self.check_edge(f)?;
        if e.shares_vertex(f) {
            return Ok(Distance::Finite(0));
        }
        let from_lo = self.distances_from(e.lo());
        let from_hi = self.distances_from(e.hi());
        Ok([from_lo[f.lo()], from_lo[f.hi()], from_hi[f.lo()], from_hi[f.hi()]]
            .into_iter()
            .min()
            .unwrap())
    }

    /// `edge_distance(e, f) >= 2` without a BFS: disjoint and not joined by an edge.
    pub fn edges_far_apart(&self, e: EdgeId, f: EdgeId) -> bool {
        !e.shares_vertex(f)
            && e
                .endpoints()
                .iter()
                .all(|&a| f.endpoints().iter().all(|&b| !self.is_adjacent(a, b)))
    }
}

/// Cycle through the BFS tree closed by the same-side edge `u`-`w`.
fn odd_cycle(parent: &[usize], u: usize, w: usize) -> Vec<usize> {
    let ancestors = |mut v: usize| {
        let mut path = vec![v];
        while parent[v] != usize::MAX {
            v = parent[v];
            path.push(v);
        }
        path
    };
    let pu = ancestors(u);
    let pw = ancestors(w);
    // Trim the shared tail above the lowest common ancestor.
    let mut i = pu.len();
    let mut j = pw.len();
    while i > 1 && j > 1 && pu[i - 2] == pw[j - 2] {
        i -= 1;
        j -= 1;
    }
    let mut cycle: Vec<usize> = pu[..i].to_vec();
    cycle.extend(pw[..j - 1].iter().rev());
    cycle
}
