//! Extremal constructions showing the sufficient conditions are tight.
//!
//! Every graph here has the shape `K_a ∨ (K_b ∪ c·K_1)`, laid out as the
//! join clique on `0..a`, then the inner clique, then the `c` vertices that
//! become isolated once the join clique is deleted. Deleting
//! `VertexSet::full(a)` therefore realises the designed deficiency.

use alloc::format;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// `⌊(k + 1/2)·t⌋` in exact integers.
pub fn floor_k_half(k: usize, t: usize) -> usize {
    (2 * k + 1) * t / 2
}

/// `⌊(k + 3/2)·t⌋` in exact integers.
pub fn floor_k_three_halves(k: usize, t: usize) -> usize {
    (2 * k + 3) * t / 2
}

/// `K_a ∨ (K_b ∪ c·K_1)`.
pub fn clique_join(a: usize, b: usize, c: usize) -> Graph {
    Graph::complete(a).join(&Graph::complete(b).union(&Graph::empty(c)))
}

/// `G₁ = K_s ∨ (K_{n₁} ∪ (⌊(k+1/2)s⌋+1)·K_1)` with `n₁ = n − ⌊(k+3/2)s⌋ − 1`.
pub fn g1(n: usize, k: usize, s: usize) -> Result<Graph> {
    crate::check_k(k)?;
    if s < 1 {
        return Err(Error::InvalidParameters(format!(
            "s must be at least 1, got {s}"
        )));
    }
    let need = floor_k_three_halves(k, s) + 1;
    if n < need {
        return Err(Error::InvalidParameters(format!(
            "order {n} below the minimum {need} for k = {k}, s = {s}"
        )));
    }
    Ok(clique_join(s, n - need, floor_k_half(k, s) + 1))
}

/// The edge-count sharpness graph: `G₁` with `1 ≤ t ≤ k−1`.
pub fn remark31(n: usize, k: usize, t: usize) -> Result<Graph> {
    crate::check_k(k)?;
    if t < 1 || t > k - 1 {
        return Err(Error::InvalidParameters(format!(
            "t must lie in 1..={} for k = {k}, got {t}",
            k - 1
        )));
    }
    g1(n, k, t)
}

/// `K_δ ∨ (⌊(k+1/2)δ⌋+1)·K_1` for odd `δ`; its order is `((2k+3)δ+1)/2`.
pub fn remark41(k: usize, delta: usize) -> Result<Graph> {
    crate::check_k(k)?;
    if delta.is_multiple_of(2) {
        return Err(Error::InvalidParameters(format!(
            "delta must be odd and positive, got {delta}"
        )));
    }
    Ok(clique_join(delta, 0, floor_k_half(k, delta) + 1))
}

/// `K_{2+2t} ∨ ((1+t)(2k+1)+1)·K_1`.
pub fn remark51(k: usize, t: usize) -> Result<Graph> {
    crate::check_k(k)?;
    Ok(clique_join(2 + 2 * t, 0, (1 + t) * (2 * k + 1) + 1))
}
