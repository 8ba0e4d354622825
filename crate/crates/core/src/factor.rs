//! The exact isolated-vertex criterion and the combinatorial sufficient
//! conditions. Every comparison here is in integers.

use alloc::format;
use alloc::vec::Vec;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::extremal::{floor_k_half, floor_k_three_halves};
use crate::graph::{Graph, VertexSet};
use crate::verdict::{ConditionVerdict, Theorem, Witness};

/// Order caps for the exponential searches.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Limits {
    pub deficiency: usize,
    pub alpha: usize,
    pub connectivity: usize,
    pub factor: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Self {
            deficiency: 24,
            alpha: 20,
            connectivity: 20,
            factor: 12,
        }
    }
}

fn check_cap(g: &Graph, cap: usize) -> Result<Vec<u64>> {
    if g.order() > cap.min(64) {
        return Err(Error::TooLarge {
            order: g.order(),
            cap: cap.min(64),
        });
    }
    Ok(g.adjacency_masks().expect("order at most 64"))
}

fn full_mask(n: usize) -> u64 {
    if n == 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

fn ones(x: u64) -> i64 {
    i64::from(x.count_ones())
}

/// Order on vertex bitsets read as strings `b₀b₁…`: the set that omits the
/// first differing vertex is smaller.
pub fn lex_less(a: u64, b: u64) -> bool {
    let d = a ^ b;
    d != 0 && a & (d & d.wrapping_neg()) == 0
}

/// A maximizer of `2·i(G−S) − (2k+1)|S|`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DeficiencyReport {
    pub k: usize,
    pub best_set: VertexSet,
    /// `i(G − best_set)`.
    pub isolated: usize,
    pub value: i64,
}

impl DeficiencyReport {
    /// The maximum is at least `2·i(G) ≥ 0` (take `S = ∅`), so a factor
    /// exists exactly when it is zero.
    pub fn has_factor(&self) -> bool {
        self.value == 0
    }
}

struct DeficiencySearch<'a> {
    adj: &'a [u64],
    n: usize,
    weight: i64,
    best: Option<(i64, u64, u64)>,
}

impl DeficiencySearch<'_> {
    // Enumerates independent sets I that are exactly the isolated set of
    // G − N(I); the matching S = N(I) range over every candidate maximizer,
    // since a vertex of S not adjacent to an isolated vertex of G − S can be
    // dropped for a gain of 2k+1.
    fn descend(&mut self, v: usize, iso: u64, sep: u64, excluded: u64) {
        let value = 2 * ones(iso) - self.weight * ones(sep);
        let undecided = full_mask(self.n) & !(full_mask(v));
        let upper = value + 2 * ones(undecided & !sep);
        if let Some((best, _, _)) = self.best {
            if upper < best {
                return;
            }
        }
        if v == self.n {
            let better = match self.best {
                None => true,
                Some((best, set, _)) => value > best || (value == best && lex_less(sep, set)),
            };
            if better {
                self.best = Some((value, sep, iso));
            }
            return;
        }
        let bit = 1u64 << v;
        let nv = self.adj[v];
        if sep & bit != 0 {
            self.descend(v + 1, iso, sep, excluded);
        } else if nv & !sep == 0 {
            self.descend(v + 1, iso | bit, sep, excluded);
        } else {
            let grown = sep | nv;
            let mut pending = excluded & !grown;
            let mut closed = true;
            while pending != 0 {
                let u = pending.trailing_zeros() as usize;
                pending &= pending - 1;
                if self.adj[u] & !grown == 0 {
                    closed = false;
                    break;
                }
            }
            if closed {
                self.descend(v + 1, iso | bit, grown, excluded);
            }
            self.descend(v + 1, iso, sep, excluded | bit);
        }
    }
}

/// Exact maximum of `2·i(G−S) − (2k+1)|S|` over all `S ⊆ V(G)`, with the
/// [`lex_less`]-smallest maximizer. Order capped at 24.
pub fn deficiency(g: &Graph, k: usize) -> Result<DeficiencyReport> {
    deficiency_capped(g, k, Limits::default().deficiency)
}

pub fn deficiency_capped(g: &Graph, k: usize, cap: usize) -> Result<DeficiencyReport> {
    crate::check_k(k)?;
    let adj = check_cap(g, cap)?;
    let mut search = DeficiencySearch {
        adj: &adj,
        n: g.order(),
        weight: 2 * k as i64 + 1,
        best: None,
    };
    search.descend(0, 0, 0, 0);
    let (value, set, iso) = search.best.expect("S = {} is always reachable");
    Ok(DeficiencyReport {
        k,
        best_set: VertexSet::from_mask(set),
        isolated: iso.count_ones() as usize,
        value,
    })
}

/// Factor existence by the exact isolated-vertex criterion.
pub fn has_factor_thm11(g: &Graph, k: usize) -> Result<bool> {
    Ok(deficiency(g, k)?.has_factor())
}

pub fn check_thm11(g: &Graph, k: usize, limits: &Limits) -> Result<ConditionVerdict> {
    let rep = deficiency_capped(g, k, limits.deficiency)?;
    Ok(ConditionVerdict::evaluated(
        Theorem::T11,
        k,
        rep.has_factor(),
        Witness::ViolatingSet {
            set: rep.best_set,
            isolated: rep.isolated,
            value: rep.value,
        },
    ))
}

fn max_independent_within(adj: &[u64], cands: u64, chosen: u64, best: &mut u64) {
    if cands == 0 {
        if chosen.count_ones() > best.count_ones() {
            *best = chosen;
        }
        return;
    }
    if chosen.count_ones() + cands.count_ones() <= best.count_ones() {
        return;
    }
    // branch on the candidate with most candidate neighbours
    let mut pick = cands.trailing_zeros() as usize;
    let mut most = 0;
    let mut rest = cands;
    while rest != 0 {
        let v = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        let d = (adj[v] & cands).count_ones();
        if d > most {
            most = d;
            pick = v;
        }
    }
    let bit = 1u64 << pick;
    if most == 0 {
        // no edges left among candidates: take all of them
        max_independent_within(adj, 0, chosen | cands, best);
        return;
    }
    max_independent_within(adj, cands & !bit & !adj[pick], chosen | bit, best);
    max_independent_within(adj, cands & !bit, chosen, best);
}

/// A maximum independent set by branch and bound (order capped at 20).
pub fn maximum_independent_set(g: &Graph) -> Result<VertexSet> {
    maximum_independent_set_capped(g, Limits::default().alpha)
}

pub fn maximum_independent_set_capped(g: &Graph, cap: usize) -> Result<VertexSet> {
    let adj = check_cap(g, cap)?;
    let mut best = 0u64;
    max_independent_within(&adj, full_mask(g.order()), 0, &mut best);
    Ok(VertexSet::from_mask(best))
}

/// `α(G)`.
pub fn independence_number(g: &Graph) -> Result<usize> {
    Ok(maximum_independent_set(g)?.len())
}

pub fn independence_number_capped(g: &Graph, cap: usize) -> Result<usize> {
    Ok(maximum_independent_set_capped(g, cap)?.len())
}

/// Lazy enumeration of the independent sets of one size, each exactly
/// once, in lexicographic order of their sorted vertex lists.
pub struct IndependentSets {
    adj: Vec<u64>,
    size: u32,
    stack: Vec<(u64, u64)>,
}

impl Iterator for IndependentSets {
    type Item = VertexSet;

    fn next(&mut self) -> Option<VertexSet> {
        while let Some((chosen, cands)) = self.stack.pop() {
            let have = chosen.count_ones();
            if have == self.size {
                return Some(VertexSet::from_mask(chosen));
            }
            if have + cands.count_ones() < self.size {
                continue;
            }
            let v = cands.trailing_zeros() as usize;
            let bit = 1u64 << v;
            self.stack.push((chosen, cands & !bit));
            self.stack.push((chosen | bit, cands & !bit & !self.adj[v]));
        }
        None
    }
}

pub fn independent_sets_of_size(g: &Graph, size: usize) -> Result<IndependentSets> {
    independent_sets_within(
        g,
        &VertexSet::full(g.order()),
        size,
        Limits::default().alpha,
    )
}

/// Independent sets of `size` drawn from `within`.
pub fn independent_sets_within(
    g: &Graph,
    within: &VertexSet,
    size: usize,
    cap: usize,
) -> Result<IndependentSets> {
    let adj = check_cap(g, cap)?;
    let cands = within.to_mask().unwrap_or(0) & full_mask(g.order());
    let stack = if size <= 64 {
        alloc::vec![(0, cands)]
    } else {
        Vec::new()
    };
    Ok(IndependentSets {
        adj,
        size: size as u32,
        stack,
    })
}

fn connected_within(adj: &[u64], alive: u64) -> bool {
    if alive == 0 {
        return false;
    }
    let mut seen = alive & alive.wrapping_neg();
    let mut frontier = seen;
    while frontier != 0 {
        let v = frontier.trailing_zeros() as usize;
        frontier &= frontier - 1;
        let fresh = adj[v] & alive & !seen;
        seen |= fresh;
        frontier |= fresh;
    }
    seen == alive
}

/// Whether `G` has more than `t` vertices and no set of fewer than `t`
/// vertices disconnects it. Exhaustive over candidate separators.
pub fn is_t_connected(g: &Graph, t: usize) -> Result<bool> {
    is_t_connected_capped(g, t, Limits::default().connectivity)
}

pub fn is_t_connected_capped(g: &Graph, t: usize, cap: usize) -> Result<bool> {
    let adj = check_cap(g, cap)?;
    let n = g.order();
    if n < t + 1 {
        return Ok(false);
    }
    let all = full_mask(n);
    for size in 0..t {
        if size == 0 {
            if !connected_within(&adj, all) {
                return Ok(false);
            }
            continue;
        }
        // Gosper's hack over all `size`-subsets
        let mut x: u64 = (1u64 << size) - 1;
        while x & !all == 0 {
            if !connected_within(&adj, all & !x) {
                return Ok(false);
            }
            let c = x & x.wrapping_neg();
            let r = x.wrapping_add(c);
            if r == 0 {
                break;
            }
            x = (((r ^ x) >> 2) / c) | r;
        }
    }
    Ok(true)
}

/// `binom(n − ⌊(k+1/2)t⌋ − 1, 2) + t·(⌊(k+1/2)t⌋ + 1)`.
pub fn extremal_edge_threshold(n: usize, k: usize, t: usize) -> Result<usize> {
    crate::check_k(k)?;
    let f = floor_k_half(k, t);
    if n < f + 1 {
        return Err(Error::InvalidParameters(format!(
            "n = {n} is below floor((k+1/2)t) + 1 = {}",
            f + 1
        )));
    }
    let a = n - f - 1;
    Ok(a * a.saturating_sub(1) / 2 + t * (f + 1))
}

/// Smallest order admitted by the edge-count condition:
/// `2kn ≥ (2k²+5k+1)t + k²+5k+2`.
pub fn thm13_order_ok(n: usize, k: usize, t: usize) -> bool {
    2 * k * n >= (2 * k * k + 5 * k + 1) * t + k * k + 5 * k + 2
}

/// Edge-count condition for t-connected graphs with `1 ≤ t ≤ k−1`.
pub fn check_thm13(g: &Graph, k: usize, t: usize, limits: &Limits) -> Result<ConditionVerdict> {
    crate::check_k(k)?;
    let na = |reason: alloc::string::String| {
        Ok(ConditionVerdict::not_applicable(Theorem::T13, k, reason))
    };
    if t < 1 || t > k - 1 {
        return na(format!("t = {t} outside 1..={}", k - 1));
    }
    let n = g.order();
    if !thm13_order_ok(n, k, t) {
        return na(format!(
            "order {n} below the bound ((2k^2+5k+1)t + k^2+5k+2)/(2k) for k = {k}, t = {t}"
        ));
    }
    if !is_t_connected_capped(g, t, limits.connectivity)? {
        return na(format!("graph is not {t}-connected"));
    }
    let threshold = extremal_edge_threshold(n, k, t)?;
    Ok(ConditionVerdict::evaluated(
        Theorem::T13,
        k,
        g.size() > threshold,
        Witness::EdgeCount {
            edges: g.size(),
            threshold,
        },
    ))
}

/// Degree condition over independent sets of size `⌊(k+1/2)δ⌋ + 1`.
///
/// A set violates the condition when every member has
/// `(2k+3)·deg < 2n`, so it suffices to search the low-degree vertices.
/// No such set of the required size means the condition holds.
pub fn check_thm14(g: &Graph, k: usize, limits: &Limits) -> Result<ConditionVerdict> {
    crate::check_k(k)?;
    let n = g.order();
    let delta = match g.min_degree() {
        Err(_) => {
            return Ok(ConditionVerdict::not_applicable(
                Theorem::T14,
                k,
                "empty graph",
            ))
        }
        Ok(0) => {
            return Ok(ConditionVerdict::not_applicable(
                Theorem::T14,
                k,
                "minimum degree is 0",
            ))
        }
        Ok(d) => d,
    };
    let set_size = floor_k_half(k, delta) + 1;
    let low: VertexSet = (0..n)
        .filter(|&v| (2 * k + 3) * g.degree(v) < 2 * n)
        .collect();
    if let Some(set) = independent_sets_within(g, &low, set_size, limits.alpha)?.next() {
        let vertices: Vec<usize> = set.iter().collect();
        let degrees = vertices.iter().map(|&v| g.degree(v)).collect();
        return Ok(ConditionVerdict::evaluated(
            Theorem::T14,
            k,
            false,
            Witness::IndependentSet { vertices, degrees },
        ));
    }
    let (low_graph, _) = g.delete_vertices(&VertexSet::full(n).difference(&low));
    let low_degree_alpha = independence_number_capped(&low_graph, limits.alpha)?;
    Ok(ConditionVerdict::evaluated(
        Theorem::T14,
        k,
        true,
        Witness::LowDegreeIndependence {
            set_size,
            low_degree_alpha,
        },
    ))
}

/// `(2k+1)·δ(G) ≥ 2·α(G)`.
pub fn check_thm15(g: &Graph, k: usize, limits: &Limits) -> Result<ConditionVerdict> {
    crate::check_k(k)?;
    let Ok(min_degree) = g.min_degree() else {
        return Ok(ConditionVerdict::not_applicable(
            Theorem::T15,
            k,
            "empty graph",
        ));
    };
    let alpha = independence_number_capped(g, limits.alpha)?;
    Ok(ConditionVerdict::evaluated(
        Theorem::T15,
        k,
        (2 * k + 1) * min_degree >= 2 * alpha,
        Witness::DegreeIndependence { min_degree, alpha },
    ))
}

/// Order lower bound `⌊(k+3/2)s⌋ + 1` for `G₁`.
pub fn g1_min_order(k: usize, s: usize) -> usize {
    floor_k_three_halves(k, s) + 1
}
