use crate::error::{Error, Result};
use crate::graph::EdgeId;

/// Round-robin 1-factorization of `K_order` on vertices `0..order`.
///
/// The last vertex stays fixed; in round `r` it meets `r`, and the remaining
/// vertices pair up as `r + k` with `r - k` modulo `order - 1`. Each class is
/// sorted canonically.
pub fn one_factorization(order: usize) -> Result<Vec<Vec<EdgeId>>> {
    if order == 0 || order % 2 == 1 {
        return Err(Error::OddOrder(order));
    }
    let rounds = order - 1;
    let pivot = order - 1;
    let classes = (0..rounds)
        .map(|r| {
            let mut class = vec![EdgeId::of(r, pivot)];
            for k in 1..order / 2 {
                class.push(EdgeId::of((r + k) % rounds, (r + rounds - k) % rounds));
            }
            class.sort_unstable();
            class
        })
        .collect();
    Ok(classes)
}
