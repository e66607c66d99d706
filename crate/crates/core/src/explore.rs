//! Exhaustive or sampled search for non-extendable precolorings of
//! `G □ K_{n,m}` with palette `Δ(G) + n`.

use rand::distributions::WeightedIndex;
use rand::prelude::*;
use rand_chacha::ChaCha8Rng;

use crate::coloring::Color;
use crate::error::{Error, Result};
use crate::extension::Precoloring;
use crate::families::{cartesian_product, Family};
use crate::graph::{EdgeId, Graph};
use crate::oracle::{decide_extendable, Verdict};
use crate::random::random_induced_matching;

/// Search nodes allowed per decided instance.
pub const NODE_BUDGET: u64 = 1_000_000;

/// Above this many induced matchings the sampler stops enumerating them and
/// grows random matchings greedily instead.
const MATCHING_CAP: usize = 200_000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExplorationReport {
    pub instances: u64,
    pub extendable: u64,
    /// Instances whose oracle run hit [`NODE_BUDGET`].
    pub inconclusive: u64,
    pub counterexamples: Vec<Precoloring>,
    pub budget_used: u64,
    pub seed: u64,
    pub exhaustive: bool,
}

impl ExplorationReport {
    pub fn is_conclusive(&self) -> bool {
        self.inconclusive == 0
    }
}

/// Decides up to `budget` precolored induced matchings of `g □ K_{n,m}`.
/// When all of them fit in the budget they are enumerated in canonical
/// order; otherwise `budget` instances are drawn with a `seed`ed generator.
pub fn explore_conjecture11(
    g: &Graph,
    n: usize,
    m: usize,
    budget: u64,
    seed: u64,
) -> Result<ExplorationReport> {
    if m < 1 || n < m {
        return Err(Error::BadParameter(format!("need n >= m >= 1, got n={n}, m={m}")));
    }
    g.bipartition()?;
    let product = cartesian_product(g, &Family::CompleteBipartite(n, m).build()?)?;
    let host = product.graph();
    let palette = (g.max_degree() + n) as Color;

    let mut report = ExplorationReport {
        instances: 0,
        extendable: 0,
        inconclusive: 0,
        counterexamples: Vec::new(),
        budget_used: 0,
        seed,
        exhaustive: false,
    };
    let decide = |report: &mut ExplorationReport, pre: Precoloring| -> Result<()> {
        report.instances += 1;
        report.budget_used += 1;
        match decide_extendable(host, &pre, palette, Some(NODE_BUDGET)) {
            Ok(Verdict::Extendable(_)) => report.extendable += 1,
            Ok(Verdict::NotExtendable) => report.counterexamples.push(pre),
            Err(Error::BudgetExceeded { .. }) => report.inconclusive += 1,
            Err(e) => return Err(e),
        }
        Ok(())
    };

    let (matchings, complete) = induced_matchings(host, MATCHING_CAP);
    let total = complete.then(|| {
        matchings.iter().fold(0u64, |acc, mat| {
            acc.saturating_add((palette as u64).saturating_pow(mat.len() as u32))
        })
    });

    if total.is_some_and(|t| t <= budget) {
        report.exhaustive = true;
        for matching in &matchings {
            let mut colors = vec![1 as Color; matching.len()];
            loop {
                let pre = Precoloring::with_entries(
                    palette,
                    matching.iter().copied().zip(colors.iter().copied()),
                );
                decide(&mut report, pre)?;
                if !next_tuple(&mut colors, palette) {
                    break;
                }
            }
        }
        return Ok(report);
    }

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let weights = complete.then(|| {
        WeightedIndex::new(
            matchings
                .iter()
                .map(|mat| (palette as f64).powi(mat.len() as i32)),
        )
        .expect("at least the empty matching")
    });
    let max_size = host.order() / 2;
    for _ in 0..budget {
        let matching = match &weights {
            Some(w) => matchings[w.sample(&mut rng)].clone(),
            None => random_induced_matching(&mut rng, host, max_size),
        };
        let pre = Precoloring::with_entries(
            palette,
            matching
                .into_iter()
                .map(|e| (e, rng.gen_range(1..=palette))),
        );
        decide(&mut report, pre)?;
    }
    Ok(report)
}

/// Advances `colors` through `1..=palette` like an odometer.
fn next_tuple(colors: &mut [Color], palette: Color) -> bool {
    for c in colors.iter_mut().rev() {
        if *c < palette {
            *c += 1;
            return true;
        }
        *c = 1;
    }
    false
}

/// All induced matchings of `g` (including the empty one) in canonical order,
/// and whether the enumeration finished before `cap` was reached.
pub fn induced_matchings(g: &Graph, cap: usize) -> (Vec<Vec<EdgeId>>, bool) {
    fn rec(
        g: &Graph,
        start: usize,
        current: &mut Vec<EdgeId>,
        out: &mut Vec<Vec<EdgeId>>,
        cap: usize,
    ) -> bool {
        if out.len() >= cap {
            return false;
        }
        out.push(current.clone());
        for i in start..g.size() {
            let e = g.edges()[i];
            if current.iter().all(|&f| g.edges_far_apart(e, f)) {
                current.push(e);
                let ok = rec(g, i + 1, current, out, cap);
                current.pop();
                if !ok {
                    return false;
                }
            }
        }
        true
    }
    let mut out = Vec::new();
    let complete = rec(g, 0, &mut Vec::new(), &mut out, cap);
    (out, complete)
}
