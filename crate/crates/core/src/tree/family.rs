//! The tree family `T(2k+1)`.
//!
//! A base tree `R` is admissible when, writing `R'` for `R − Leaf(R)`, every
//! vertex `x` of `R'` has odd `R'`-degree `2r+1 ≤ 2k+1` and
//! `2ℓ(x) + (2r+1) ≤ 2k+1`, where `ℓ(x)` counts the leaves of `R` at `x`.
//! The member `T_R` subdivides every edge of `R'` once and tops up the
//! pendant leaves so that each `x` carries exactly `k − r` of them.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::tree::canonical::{canonical_code, free_trees};

/// Why a candidate base tree is not admissible.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Rejection {
    InvalidK(usize),
    NotATree,
    /// `R − Leaf(R)` is empty (`R` is `K_1`, `K_2` or a star).
    EmptyTrimmed,
    /// Condition (a): trimmed degree not odd or above `2k+1`.
    TrimmedDegree {
        vertex: usize,
        degree: usize,
    },
    /// Condition (b): `2ℓ(x) + d(x) > 2k+1`.
    LeafBudget {
        vertex: usize,
        leaves: usize,
        degree: usize,
    },
}

impl fmt::Display for Rejection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::InvalidK(k) => write!(f, "k must be at least 2, got {k}"),
            Self::NotATree => f.write_str("base graph is not a tree"),
            Self::EmptyTrimmed => f.write_str("removing the leaves leaves nothing"),
            Self::TrimmedDegree { vertex, degree } => {
                write!(
                    f,
                    "condition (a): vertex {vertex} has trimmed degree {degree}"
                )
            }
            Self::LeafBudget {
                vertex,
                leaves,
                degree,
            } => write!(
                f,
                "condition (b): vertex {vertex} has 2*{leaves} + {degree} above the budget"
            ),
        }
    }
}

/// An admissible base tree together with its derived data.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BaseTreeWitness {
    pub base: Graph,
    pub leaf_set: VertexSet,
    /// `R − Leaf(R)`, relabeled; `trimmed_labels[i]` is the base vertex.
    pub trimmed: Graph,
    pub trimmed_labels: Vec<usize>,
    /// `ℓ(x)` for each trimmed vertex, in trimmed labels.
    pub leaf_counts: Vec<usize>,
}

impl BaseTreeWitness {
    /// Order of `T_R` for this base: trimmed vertices, one subdivision per
    /// trimmed edge, and `k − r` leaves at each trimmed vertex.
    pub fn member_order(&self, k: usize) -> usize {
        let t = self.trimmed.order();
        let leaves: usize = (0..t).map(|x| k - (self.trimmed.degree(x) - 1) / 2).sum();
        t + self.trimmed.size() + leaves
    }
}

/// Checks the admissibility conditions on `r` and returns the witness.
pub fn validate_base(r: &Graph, k: usize) -> core::result::Result<BaseTreeWitness, Rejection> {
    if k < 2 {
        return Err(Rejection::InvalidK(k));
    }
    if !r.is_tree() {
        return Err(Rejection::NotATree);
    }
    let leaf_set: VertexSet = (0..r.order()).filter(|&v| r.degree(v) == 1).collect();
    let (trimmed, trimmed_labels) = r.delete_vertices(&leaf_set);
    if trimmed.order() == 0 {
        return Err(Rejection::EmptyTrimmed);
    }
    let mut leaf_counts = Vec::with_capacity(trimmed.order());
    for (x, &v) in trimmed_labels.iter().enumerate() {
        let d = trimmed.degree(x);
        if d % 2 == 0 || d > 2 * k + 1 {
            return Err(Rejection::TrimmedDegree {
                vertex: v,
                degree: d,
            });
        }
        let leaves = r.neighbors(v).intersection(&leaf_set).len();
        if 2 * leaves + d > 2 * k + 1 {
            return Err(Rejection::LeafBudget {
                vertex: v,
                leaves,
                degree: d,
            });
        }
        leaf_counts.push(leaves);
    }
    Ok(BaseTreeWitness {
        base: r.clone(),
        leaf_set,
        trimmed,
        trimmed_labels,
        leaf_counts,
    })
}

/// Builds `T_R`.
///
/// Labels: trimmed vertices `0..t`, then one subdivision vertex per trimmed
/// edge (in edge order), then for each trimmed vertex its original leaves
/// followed by the added pendants.
pub fn construct_tr(w: &BaseTreeWitness, k: usize) -> Graph {
    let t = w.trimmed.order();
    let mut edges = Vec::new();
    let mut next = t;
    for (a, b) in w.trimmed.edges() {
        edges.push((a, next));
        edges.push((next, b));
        next += 1;
    }
    for x in 0..t {
        let r = (w.trimmed.degree(x) - 1) / 2;
        for _ in 0..(k - r) {
            edges.push((x, next));
            next += 1;
        }
    }
    Graph::new(next, &edges).expect("construction stays in range")
}

/// Canonical codes of `T(2k+1)` members up to an order bound.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TreeCatalog {
    pub k: usize,
    pub max_order: usize,
    /// order → code → one generating base tree.
    pub members: BTreeMap<usize, BTreeMap<String, BaseTreeWitness>>,
}

impl TreeCatalog {
    pub fn contains(&self, order: usize, code: &str) -> bool {
        self.members
            .get(&order)
            .is_some_and(|m| m.contains_key(code))
    }

    pub fn count_at(&self, order: usize) -> usize {
        self.members.get(&order).map_or(0, BTreeMap::len)
    }

    pub fn len(&self) -> usize {
        self.members.values().map(BTreeMap::len).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn has_order(&self, order: usize) -> bool {
        self.count_at(order) > 0
    }

    /// Every `(order, code, witness)` in ascending order.
    pub fn iter(&self) -> impl Iterator<Item = (usize, &str, &BaseTreeWitness)> {
        self.members
            .iter()
            .flat_map(|(&o, m)| m.iter().map(move |(c, w)| (o, c.as_str(), w)))
    }

    /// Whether `t` is isomorphic to a catalog member.
    pub fn is_member(&self, t: &Graph, k: usize) -> Result<bool> {
        if k != self.k {
            return Err(Error::InvalidParameters(alloc::format!(
                "catalog built for k = {}, queried with k = {k}",
                self.k
            )));
        }
        if t.order() > self.max_order {
            return Err(Error::CatalogTooSmall {
                order: t.order(),
                max_order: self.max_order,
            });
        }
        match canonical_code(t) {
            Ok(code) => Ok(self.contains(t.order(), &code)),
            Err(Error::NotATree) => Ok(false),
            Err(e) => Err(e),
        }
    }
}

/// Enumerates every `T_R` of order at most `max_order`.
///
/// Since `|T_R| ≥ |R| + 1`, base trees up to order `max_order − 1` suffice.
/// Base trees are visited by order and then by canonical code, so the
/// stored witness for each member is deterministic.
pub fn enumerate_catalog(k: usize, max_order: usize) -> Result<TreeCatalog> {
    crate::check_k(k)?;
    if max_order < 1 {
        return Err(Error::InvalidParameters(
            "max_order must be at least 1".into(),
        ));
    }
    let mut members: BTreeMap<usize, BTreeMap<String, BaseTreeWitness>> = BTreeMap::new();
    let bases = free_trees(max_order - 1);
    for level in &bases {
        for r in level.values() {
            let Ok(w) = validate_base(r, k) else { continue };
            if w.member_order(k) > max_order {
                continue;
            }
            let t = construct_tr(&w, k);
            let code = canonical_code(&t).expect("T_R is a tree");
            members
                .entry(t.order())
                .or_default()
                .entry(code)
                .or_insert(w);
        }
    }
    Ok(TreeCatalog {
        k,
        max_order,
        members,
    })
}
