//! Brute-force reference implementations shared by the integration tests.
#![allow(dead_code)]

use edgex::{Color, EdgeColoring, EdgeId, Graph, ListAssignment, Precoloring};

/// All-pairs shortest path lengths by Floyd-Warshall, `None` when unreachable.
pub fn floyd(g: &Graph) -> Vec<Vec<Option<usize>>> {
    let n = g.order();
    let mut d = vec![vec![None; n]; n];
    for (v, row) in d.iter_mut().enumerate() {
        row[v] = Some(0);
    }
    for e in g.edges() {
        d[e.lo()][e.hi()] = Some(1);
        d[e.hi()][e.lo()] = Some(1);
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                if let (Some(a), Some(b)) = (d[i][k], d[k][j]) {
                    if d[i][j].is_none_or(|c| a + b < c) {
                        d[i][j] = Some(a + b);
                    }
                }
            }
        }
    }
    d
}

/// Minimum vertex distance between the endpoints of two edges.
pub fn brute_edge_distance(g: &Graph, e: EdgeId, f: EdgeId) -> Option<usize> {
    let d = floyd(g);
    let mut best = None;
    for a in e.endpoints() {
        for b in f.endpoints() {
            if let Some(x) = d[a][b] {
                best = Some(best.map_or(x, |y: usize| y.min(x)));
            }
        }
    }
    best
}

fn proper(g: &Graph, colors: &[Color]) -> bool {
    let edges = g.edges();
    for i in 0..edges.len() {
        for j in i + 1..edges.len() {
            if colors[i] == colors[j] && edges[i].shares_vertex(edges[j]) {
                return false;
            }
        }
    }
    true
}

/// Tries every combination of list colors. Only for tiny graphs.
pub fn brute_list_colorable(g: &Graph, lists: &ListAssignment) -> bool {
    let lists: Vec<Vec<Color>> = g
        .edges()
        .iter()
        .map(|&e| lists.list(e).unwrap().to_vec())
        .collect();
    let mut pick = vec![0usize; lists.len()];
    if lists.iter().any(|l| l.is_empty()) {
        return false;
    }
    loop {
        let colors: Vec<Color> = pick.iter().zip(&lists).map(|(&i, l)| l[i]).collect();
        if proper(g, &colors) {
            return true;
        }
        let mut k = pick.len();
        loop {
            if k == 0 {
                return false;
            }
            k -= 1;
            pick[k] += 1;
            if pick[k] < lists[k].len() {
                break;
            }
            pick[k] = 0;
        }
    }
}

/// Whether `pre` extends to a proper coloring with `1..=palette`, by
/// plain enumeration.
pub fn brute_extendable(g: &Graph, pre: &Precoloring, palette: Color) -> bool {
    let map = g
        .edges()
        .iter()
        .map(|&e| {
            let list = match pre.get(e) {
                Some(c) => vec![c],
                None => (1..=palette).collect(),
            };
            (e, list)
        })
        .collect();
    brute_list_colorable(g, &ListAssignment::new(g, map).unwrap())
}

/// Proper, complete and inside `1..=palette`.
pub fn is_proper_total(g: &Graph, col: &EdgeColoring, palette: Color) -> bool {
    let colors: Option<Vec<Color>> = g.edges().iter().map(|&e| col.get(e)).collect();
    match colors {
        Some(c) => c.iter().all(|&x| (1..=palette).contains(&x)) && proper(g, &c),
        None => false,
    }
}

/// Precolored edges keep their color.
pub fn respects(pre: &Precoloring, col: &EdgeColoring) -> bool {
    pre.iter().all(|(e, c)| col.get(e) == Some(c))
}
