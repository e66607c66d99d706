//! Galvin's kernel method for list edge coloring bipartite graphs.
//!
//! A proper base coloring orients the line graph: at an `X` vertex an edge
//! points to edges of lower base color, at a `Y` vertex to edges of higher
//! base color. Every edge then has out-degree at most `Δ - 1`, and kernels of
//! induced subdigraphs are exactly stable matchings where `X` vertices prefer
//! low base colors and `Y` vertices prefer high ones.
//!
//! Colors are handed out in ascending order. For color `c` the uncolored
//! edges whose working list still holds `c` get a stable matching computed by
//! `X`-proposing deferred acceptance; matched edges take `c`, every other
//! eligible edge is dominated by a matched one and drops `c`. Each drop also
//! removes at least one out-neighbor from the uncolored set, so lists stay
//! strictly longer than out-degrees and never run dry.

use std::collections::{BTreeMap, VecDeque};

use super::{konig_color, Color, EdgeColoring, ListAssignment};
use crate::error::{Error, Result};
use crate::graph::{Bipartition, Graph};

pub fn galvin_list_color(g: &Graph, lists: &ListAssignment) -> Result<EdgeColoring> {
    let sides = g.bipartition()?;
    let delta = g.max_degree();
    let aligned = lists.aligned(g)?;
    if let Some((i, l)) = aligned.iter().enumerate().find(|(_, l)| l.len() < delta) {
        return Err(Error::ListTooShort {
            edge: g.edges()[i],
            len: l.len(),
            required: delta,
        });
    }

    let base = konig_color(g)?;
    let base: Vec<Color> = g.edges().iter().map(|&e| base.get(e).unwrap()).collect();
    let ends: Vec<(usize, usize)> = g.edges().iter().map(|&e| sides.orient(e)).collect();

    let mut working: Vec<Vec<Color>> = aligned.iter().map(|l| l.to_vec()).collect();
    let mut color: Vec<Option<Color>> = vec![None; g.size()];

    for c in lists.universe() {
        let eligible: Vec<usize> = (0..g.size())
            .filter(|&i| color[i].is_none() && working[i].binary_search(&c).is_ok())
            .collect();
        if eligible.is_empty() {
            continue;
        }
        let kernel = stable_matching(g, &sides, &ends, &base, &eligible);
        check_kernel(&ends, &base, &eligible, &kernel, c)?;
        for &i in &eligible {
            if kernel.binary_search(&i).is_ok() {
                color[i] = Some(c);
            } else {
                let pos = working[i].binary_search(&c).unwrap();
                working[i].remove(pos);
            }
        }
    }

    let mut assignment = BTreeMap::new();
    for (i, &e) in g.edges().iter().enumerate() {
        let c = color[i]
            .ok_or_else(|| Error::InternalNoKernel(format!("edge {e} left uncolored")))?;
        assignment.insert(e, c);
    }
    let palette = lists.universe().last().copied().unwrap_or(0);
    Ok(EdgeColoring::from_assignment(palette, assignment))
}

/// Deferred acceptance on the eligible edges, proposals from the `X` side.
/// Returns the matched edge indices in ascending order.
fn stable_matching(
    g: &Graph,
    sides: &Bipartition,
    ends: &[(usize, usize)],
    base: &[Color],
    eligible: &[usize],
) -> Vec<usize> {
    let mut options: Vec<Vec<usize>> = vec![Vec::new(); g.order()];
    for &i in eligible {
        options[ends[i].0].push(i);
    }
    for list in &mut options {
        list.sort_by_key(|&i| base[i]);
    }
    let mut next = vec![0usize; g.order()];
    let mut held: Vec<Option<usize>> = vec![None; g.order()];
    let mut free: VecDeque<usize> = (0..g.order())
        .filter(|&v| sides.is_x(v) && !options[v].is_empty())
        .collect();

    while let Some(x) = free.pop_front() {
        let Some(&i) = options[x].get(next[x]) else {
            continue;
        };
        next[x] += 1;
        let y = ends[i].1;
        match held[y] {
            None => held[y] = Some(i),
            Some(j) if base[i] > base[j] => {
                held[y] = Some(i);
                free.push_back(ends[j].0);
            }
            Some(_) => free.push_back(x),
        }
    }
    let mut matched: Vec<usize> = held.into_iter().flatten().collect();
    matched.sort_unstable();
    matched
}

/// Independence and absorption of the kernel in the eligible subdigraph.
fn check_kernel(
    ends: &[(usize, usize)],
    base: &[Color],
    eligible: &[usize],
    kernel: &[usize],
    c: Color,
) -> Result<()> {
    for (a, &i) in kernel.iter().enumerate() {
        for &j in &kernel[a + 1..] {
            if ends[i].0 == ends[j].0 || ends[i].1 == ends[j].1 {
                return Err(Error::InternalNoKernel(format!(
                    "color {c}: matched edges share a vertex"
                )));
            }
        }
    }
    for &i in eligible {
        if kernel.binary_search(&i).is_ok() {
            continue;
        }
        let dominated = kernel.iter().any(|&j| {
            (ends[j].0 == ends[i].0 && base[j] < base[i])
                || (ends[j].1 == ends[i].1 && base[j] > base[i])
        });
        if !dominated {
            return Err(Error::InternalNoKernel(format!(
                "color {c}: eligible edge not absorbed"
            )));
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coloring::verify_proper;
    use crate::families::Family;
    use crate::graph::EdgeId;

    fn lists_of(g: &Graph, lists: &[&[Color]]) -> ListAssignment {
        let map = g
            .edges()
            .iter()
            .zip(lists)
            .map(|(&e, l)| (e, l.to_vec()))
            .collect();
        ListAssignment::new(g, map).unwrap()
    }

    #[test]
    fn single_edge_takes_its_only_color() {
        let k2 = Family::Path(2).build().unwrap();
        let col = galvin_list_color(&k2, &lists_of(&k2, &[&[7]])).unwrap();
        assert_eq!(col.get(EdgeId::of(0, 1)), Some(7));
    }

    #[test]
    fn c4_with_two_colors() {
        let c4 = Family::Cycle(4).build().unwrap();
        let lists = lists_of(&c4, &[&[1, 2][..]; 4]);
        let col = galvin_list_color(&c4, &lists).unwrap();
        assert!(verify_proper(&c4, &col, Some(&lists)).unwrap().is_valid());
    }

    #[test]
    fn p3_with_overlapping_lists() {
        let p3 = Family::Path(3).build().unwrap();
        let lists = lists_of(&p3, &[&[1, 2], &[2, 3]]);
        let col = galvin_list_color(&p3, &lists).unwrap();
        assert!(verify_proper(&p3, &col, Some(&lists)).unwrap().is_valid());
    }

    #[test]
    fn rejects_short_lists() {
        let p3 = Family::Path(3).build().unwrap();
        let lists = lists_of(&p3, &[&[1], &[1, 2]]);
        assert!(matches!(
            galvin_list_color(&p3, &lists),
            Err(Error::ListTooShort { len: 1, required: 2, .. })
        ));
    }

    #[test]
    fn k33_with_disjoint_looking_lists() {
        let k33 = Family::CompleteBipartite(3, 3).build().unwrap();
        let lists = lists_of(
            &k33,
            &[
                &[1, 2, 3],
                &[2, 3, 4],
                &[3, 4, 5],
                &[1, 4, 5],
                &[1, 2, 5],
                &[2, 4, 6],
                &[1, 3, 6],
                &[4, 5, 6],
                &[1, 2, 6],
            ],
        );
        let col = galvin_list_color(&k33, &lists).unwrap();
        assert!(verify_proper(&k33, &col, Some(&lists)).unwrap().is_valid());
    }
}
