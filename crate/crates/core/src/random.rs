//! Seeded generators for random test instances.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::coloring::Color;
use crate::extension::Precoloring;
use crate::graph::{EdgeId, Graph};

/// Random tree on `n >= 1` vertices: vertex `i` hangs off a uniformly chosen
/// earlier vertex.
pub fn random_tree<R: Rng>(rng: &mut R, n: usize) -> Graph {
    let pairs: Vec<_> = (1..n).map(|i| (rng.gen_range(0..i), i)).collect();
    Graph::unlabeled(n.max(1), &pairs).expect("tree")
}

/// Random connected bipartite graph on `n >= 1` vertices with maximum degree
/// at most `max_degree` (at least 2 when `n > 2`). A degree-capped random
/// tree is densified with up to `extra_edges` edges between its two sides.
pub fn random_connected_bipartite<R: Rng>(
    rng: &mut R,
    n: usize,
    max_degree: usize,
    extra_edges: usize,
) -> Graph {
    let n = n.max(1);
    let mut degree = vec![0usize; n];
    let mut parity = vec![false; n];
    let mut pairs = Vec::new();
    for i in 1..n {
        let open: Vec<usize> = (0..i).filter(|&j| degree[j] < max_degree).collect();
        let &j = open.choose(rng).expect("max_degree >= 2 keeps a tree growing");
        pairs.push((j, i));
        degree[i] += 1;
        degree[j] += 1;
        parity[i] = !parity[j];
    }
    for _ in 0..extra_edges * 4 {
        if pairs.len() >= n - 1 + extra_edges {
            break;
        }
        let a = rng.gen_range(0..n);
        let b = rng.gen_range(0..n);
        if parity[a] == parity[b] || degree[a] >= max_degree || degree[b] >= max_degree {
            continue;
        }
        if pairs.iter().any(|&(x, y)| (x, y) == (a, b) || (x, y) == (b, a)) {
            continue;
        }
        pairs.push((a, b));
        degree[a] += 1;
        degree[b] += 1;
    }
    Graph::unlabeled(n, &pairs).expect("bipartite graph")
}

/// Random induced matching with at most `max_size` edges, grown greedily
/// over a shuffled edge order.
pub fn random_induced_matching<R: Rng>(rng: &mut R, g: &Graph, max_size: usize) -> Vec<EdgeId> {
    let target = rng.gen_range(0..=max_size);
    let mut order = g.edges().to_vec();
    order.shuffle(rng);
    let mut chosen: Vec<EdgeId> = Vec::new();
    for e in order {
        if chosen.len() >= target {
            break;
        }
        if chosen.iter().all(|&f| g.edges_far_apart(e, f)) {
            chosen.push(e);
        }
    }
    chosen.sort_unstable();
    chosen
}

/// Random induced matching with uniformly random colors from `1..=palette`.
pub fn random_precoloring<R: Rng>(
    rng: &mut R,
    g: &Graph,
    max_size: usize,
    palette: Color,
) -> Precoloring {
    let matching = random_induced_matching(rng, g, max_size);
    Precoloring::with_entries(
        palette,
        matching
            .into_iter()
            .map(|e| (e, rng.gen_range(1..=palette))),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn generated_graphs_respect_constraints() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for n in 1..=12 {
            let g = random_connected_bipartite(&mut rng, n, 4, 4);
            assert!(g.is_bipartite());
            assert!(g.max_degree() <= 4);
            let dist = g.distances_from(0);
            assert!(dist.iter().all(|d| d.finite().is_some()));
            let t = random_tree(&mut rng, n);
            assert_eq!(t.size(), n - 1);
        }
    }

    #[test]
    fn matchings_are_induced() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let q4 = crate::families::hypercube(4);
        for _ in 0..50 {
            let m = random_induced_matching(&mut rng, &q4, 4);
            for (i, &e) in m.iter().enumerate() {
                for &f in &m[i + 1..] {
                    assert!(q4.edges_far_apart(e, f));
                }
            }
        }
    }
}
