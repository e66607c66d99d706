use std::collections::BTreeMap;

use super::{Color, EdgeColoring};
use crate::error::Result;
use crate::graph::{EdgeId, Graph};

const FREE: usize = usize::MAX;

/// Proper `Δ(g)`-edge coloring of a bipartite graph.
///
/// Edges are colored in canonical order. When no color is free at both ends
/// of `uv`, the `a/b` alternating path starting at `v` is flipped, where `a`
/// is free at `u` and `b` is free at `v`; in a bipartite graph that path
/// never reaches `u`.
pub fn konig_color(g: &Graph) -> Result<EdgeColoring> {
    g.bipartition()?;
    let delta = g.max_degree();
    // at[v][c] is the neighbor joined to v by an edge of color c.
    let mut at = vec![vec![FREE; delta]; g.order()];
    let first_free = |row: &[usize]| row.iter().position(|&w| w == FREE).unwrap();

    for e in g.edges() {
        let (u, v) = (e.lo(), e.hi());
        let a = first_free(&at[u]);
        if at[v][a] != FREE {
            let b = first_free(&at[v]);
            let mut path = Vec::new();
            let (mut x, mut c) = (v, a);
            while at[x][c] != FREE {
                let y = at[x][c];
                debug_assert_ne!(y, u, "alternating path closed an odd cycle");
                path.push((x, y, c));
                x = y;
                c = if c == a { b } else { a };
            }
            for &(x, y, c) in &path {
                at[x][c] = FREE;
                at[y][c] = FREE;
            }
            for &(x, y, c) in &path {
                let flipped = if c == a { b } else { a };
                at[x][flipped] = y;
                at[y][flipped] = x;
            }
        }
        at[u][a] = v;
        at[v][a] = u;
    }

    let mut assignment = BTreeMap::new();
    for (u, row) in at.iter().enumerate() {
        for (c, &w) in row.iter().enumerate() {
            if w != FREE && u < w {
                assignment.insert(EdgeId::of(u, w), c as Color + 1);
            }
        }
    }
    Ok(EdgeColoring::from_assignment(delta as Color, assignment))
}
