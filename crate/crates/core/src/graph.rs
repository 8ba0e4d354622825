//! Simple undirected graphs on dense vertex labels `0..n`.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A set of vertices with bitset semantics.
///
/// Trailing zero words are never stored, so two sets with the same members
/// compare equal regardless of how they were built.
#[derive(Clone, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(into = "Vec<usize>", from = "Vec<usize>")]
pub struct VertexSet {
    words: Vec<u64>,
}

impl VertexSet {
    pub fn new() -> Self {
        Self::default()
    }

    /// The set `{0, 1, ..., n-1}`.
    pub fn full(n: usize) -> Self {
        let mut words = vec![u64::MAX; n / 64];
        if !n.is_multiple_of(64) {
            words.push((1u64 << (n % 64)) - 1);
        }
        Self { words }
    }

    /// Builds a set from the low 64 vertices encoded in `mask`.
    pub fn from_mask(mask: u64) -> Self {
        let mut s = Self { words: vec![mask] };
        s.trim();
        s
    }

    /// The members as a single word, if every member is below 64.
    pub fn to_mask(&self) -> Option<u64> {
        match self.words.len() {
            0 => Some(0),
            1 => Some(self.words[0]),
            _ => None,
        }
    }

    fn trim(&mut self) {
        while self.words.last() == Some(&0) {
            self.words.pop();
        }
    }

    pub fn insert(&mut self, v: usize) -> bool {
        let (w, b) = (v / 64, v % 64);
        if self.words.len() <= w {
            self.words.resize(w + 1, 0);
        }
        let fresh = self.words[w] & (1 << b) == 0;
        self.words[w] |= 1 << b;
        fresh
    }

    pub fn remove(&mut self, v: usize) -> bool {
        let (w, b) = (v / 64, v % 64);
        if w >= self.words.len() {
            return false;
        }
        let present = self.words[w] & (1 << b) != 0;
        self.words[w] &= !(1 << b);
        self.trim();
        present
    }

    pub fn contains(&self, v: usize) -> bool {
        self.words
            .get(v / 64)
            .is_some_and(|w| w & (1 << (v % 64)) != 0)
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    /// Largest member plus one, or 0 for the empty set.
    pub fn bound(&self) -> usize {
        match self.words.last() {
            None => 0,
            Some(w) => (self.words.len() - 1) * 64 + (64 - w.leading_zeros() as usize),
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(i, &w)| {
            let mut w = w;
            core::iter::from_fn(move || {
                if w == 0 {
                    None
                } else {
                    let b = w.trailing_zeros() as usize;
                    w &= w - 1;
                    Some(i * 64 + b)
                }
            })
        })
    }

    pub fn union(&self, other: &Self) -> Self {
        let len = self.words.len().max(other.words.len());
        let words = (0..len)
            .map(|i| {
                self.words.get(i).copied().unwrap_or(0) | other.words.get(i).copied().unwrap_or(0)
            })
            .collect();
        Self { words }
    }

    pub fn intersection(&self, other: &Self) -> Self {
        let mut s = Self {
            words: self
                .words
                .iter()
                .zip(&other.words)
                .map(|(a, b)| a & b)
                .collect(),
        };
        s.trim();
        s
    }

    pub fn difference(&self, other: &Self) -> Self {
        let mut s = Self {
            words: self
                .words
                .iter()
                .enumerate()
                .map(|(i, a)| a & !other.words.get(i).copied().unwrap_or(0))
                .collect(),
        };
        s.trim();
        s
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        self.words
            .iter()
            .enumerate()
            .all(|(i, a)| a & !other.words.get(i).copied().unwrap_or(0) == 0)
    }

    pub fn is_disjoint(&self, other: &Self) -> bool {
        self.words.iter().zip(&other.words).all(|(a, b)| a & b == 0)
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = Self::new();
        for v in iter {
            s.insert(v);
        }
        s
    }
}

impl From<Vec<usize>> for VertexSet {
    fn from(v: Vec<usize>) -> Self {
        v.into_iter().collect()
    }
}

impl From<VertexSet> for Vec<usize> {
    fn from(s: VertexSet) -> Self {
        s.iter().collect()
    }
}

impl<const N: usize> From<[usize; N]> for VertexSet {
    fn from(a: [usize; N]) -> Self {
        a.into_iter().collect()
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// The named graph families accepted by [`Graph::standard`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StandardKind {
    Complete,
    Path,
    Cycle,
    /// `K_{1,n-1}` with center 0.
    Star,
    Empty,
}

/// An immutable simple undirected graph.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<VertexSet>,
    m: usize,
}

impl Graph {
    /// Builds a graph from an edge list. Duplicate edges (in either
    /// orientation) collapse to one.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut adj = vec![VertexSet::new(); n];
        for &(u, v) in edges {
            for x in [u, v] {
                if x >= n {
                    return Err(Error::InvalidVertex {
                        vertex: x,
                        order: n,
                    });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            adj[u].insert(v);
            adj[v].insert(u);
        }
        Ok(Self::from_adjacency(adj))
    }

    fn from_adjacency(adj: Vec<VertexSet>) -> Self {
        let m = adj.iter().map(VertexSet::len).sum::<usize>() / 2;
        Self {
            n: adj.len(),
            adj,
            m,
        }
    }

    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Self {
            n,
            adj: vec![VertexSet::new(); n],
            m: 0,
        }
    }

    pub fn complete(n: usize) -> Self {
        let adj = (0..n)
            .map(|v| {
                let mut s = VertexSet::full(n);
                s.remove(v);
                s
            })
            .collect();
        Self::from_adjacency(adj)
    }

    pub fn standard(kind: StandardKind, n: usize) -> Result<Self> {
        let name = match kind {
            StandardKind::Complete => "complete graph",
            StandardKind::Path => "path",
            StandardKind::Cycle => "cycle",
            StandardKind::Star => "star",
            StandardKind::Empty => "empty graph",
        };
        if n < 1 || (kind == StandardKind::Cycle && n < 3) {
            return Err(Error::InvalidOrder {
                kind: name,
                order: n,
            });
        }
        let edges: Vec<(usize, usize)> = match kind {
            StandardKind::Complete => return Ok(Self::complete(n)),
            StandardKind::Empty => return Ok(Self::empty(n)),
            StandardKind::Path => (1..n).map(|v| (v - 1, v)).collect(),
            StandardKind::Cycle => (0..n).map(|v| (v, (v + 1) % n)).collect(),
            StandardKind::Star => (1..n).map(|v| (0, v)).collect(),
        };
        Self::new(n, &edges)
    }

    /// Erdős–Rényi `G(n, p)` driven by a seeded ChaCha8 stream; pairs are
    /// visited in `(u, v)`, `u < v` lexicographic order.
    pub fn random_gnp(n: usize, p: f64, seed: u64) -> Result<Self> {
        if !(0.0..=1.0).contains(&p) {
            return Err(Error::InvalidParameters(alloc::format!(
                "edge probability {p} outside [0, 1]"
            )));
        }
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                let x = (rng.next_u64() >> 11) as f64 / (1u64 << 53) as f64;
                if x < p {
                    edges.push((u, v));
                }
            }
        }
        Self::new(n, &edges)
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn size(&self) -> usize {
        self.m
    }

    pub fn neighbors(&self, v: usize) -> &VertexSet {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && self.adj[u].contains(v)
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| {
            self.adj[u]
                .iter()
                .filter(move |&v| v > u)
                .map(move |v| (u, v))
        })
    }

    /// Per-vertex neighbor words, available when `n ≤ 64`.
    pub fn adjacency_masks(&self) -> Option<Vec<u64>> {
        if self.n > 64 {
            return None;
        }
        Some(self.adj.iter().map(|s| s.to_mask().unwrap_or(0)).collect())
    }

    /// Disjoint union; vertices of `other` are shifted by `self.order()`.
    pub fn union(&self, other: &Graph) -> Graph {
        let shift = self.n;
        let mut adj = self.adj.clone();
        adj.extend(
            other
                .adj
                .iter()
                .map(|s| s.iter().map(|v| v + shift).collect::<VertexSet>()),
        );
        Graph {
            n: self.n + other.n,
            adj,
            m: self.m + other.m,
        }
    }

    /// Union plus every edge between the two vertex sets.
    pub fn join(&self, other: &Graph) -> Graph {
        let mut g = self.union(other);
        let (a, b) = (self.n, other.n);
        let left = VertexSet::full(a);
        let right = VertexSet::full(a + b).difference(&left);
        for v in 0..a {
            g.adj[v] = g.adj[v].union(&right);
        }
        for v in a..a + b {
            g.adj[v] = g.adj[v].union(&left);
        }
        g.m += a * b;
        g
    }

    /// `G − S`. Survivors keep their relative order; the returned map sends
    /// each new label to its original label.
    pub fn delete_vertices(&self, removed: &VertexSet) -> (Graph, Vec<usize>) {
        let keep: Vec<usize> = (0..self.n).filter(|v| !removed.contains(*v)).collect();
        (self.induced_by_list(&keep), keep)
    }

    /// Subgraph induced by `keep`, relabeled in the given order.
    pub fn induced_by_list(&self, keep: &[usize]) -> Graph {
        let mut new_label = vec![usize::MAX; self.n];
        for (i, &v) in keep.iter().enumerate() {
            new_label[v] = i;
        }
        let adj = keep
            .iter()
            .map(|&v| {
                self.adj[v]
                    .iter()
                    .filter_map(|u| (new_label[u] != usize::MAX).then_some(new_label[u]))
                    .collect()
            })
            .collect();
        Self::from_adjacency(adj)
    }

    /// Relabels vertex `v` as `perm[v]`.
    pub fn permute(&self, perm: &[usize]) -> Graph {
        assert_eq!(
            perm.len(),
            self.n,
            "permutation length must equal the order"
        );
        let mut adj = vec![VertexSet::new(); self.n];
        for v in 0..self.n {
            adj[perm[v]] = self.adj[v].iter().map(|u| perm[u]).collect();
        }
        Self::from_adjacency(adj)
    }

    /// Connected components, each sorted, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut i = 0;
            while i < comp.len() {
                let v = comp[i];
                i += 1;
                for u in self.adj[v].iter() {
                    if !seen[u] {
                        seen[u] = true;
                        comp.push(u);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn component_count(&self) -> usize {
        self.components().len()
    }

    /// Connected with at least one vertex.
    pub fn is_connected(&self) -> bool {
        self.n > 0 && self.component_count() == 1
    }

    pub fn is_tree(&self) -> bool {
        self.n >= 1 && self.m + 1 == self.n && self.is_connected()
    }

    pub fn isolated_vertices(&self) -> VertexSet {
        (0..self.n).filter(|&v| self.adj[v].is_empty()).collect()
    }

    /// `i(G)`.
    pub fn isolated_count(&self) -> usize {
        (0..self.n).filter(|&v| self.adj[v].is_empty()).count()
    }

    /// `δ(G)`.
    pub fn min_degree(&self) -> Result<usize> {
        (0..self.n)
            .map(|v| self.degree(v))
            .min()
            .ok_or(Error::EmptyGraph)
    }

    pub fn max_degree(&self) -> Result<usize> {
        (0..self.n)
            .map(|v| self.degree(v))
            .max()
            .ok_or(Error::EmptyGraph)
    }

    /// Whether `set` is pairwise non-adjacent.
    pub fn is_independent(&self, set: &VertexSet) -> bool {
        set.iter()
            .all(|v| v < self.n && self.adj[v].is_disjoint(set))
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("m", &self.m)
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}
