//! Uniform report envelope for the factor criteria.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use serde::{Deserialize, Serialize};

use crate::graph::VertexSet;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Theorem {
    /// Exact criterion: `2·i(G−S) ≤ (2k+1)|S|` for every `S`.
    T11,
    /// `μ₁ ≤ (k+1/2)·μ_{n−1}`.
    T12,
    /// Edge count above the extremal threshold for t-connected graphs.
    T13,
    /// Degree bound over independent sets of size `⌊(k+1/2)δ⌋+1`.
    T14,
    /// `δ(G) ≥ 2α(G)/(2k+1)`.
    T15,
}

impl Theorem {
    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "11" | "1.1" | "T11" => Some(Self::T11),
            "12" | "1.2" | "T12" => Some(Self::T12),
            "13" | "1.3" | "T13" => Some(Self::T13),
            "14" | "1.4" | "T14" => Some(Self::T14),
            "15" | "1.5" | "T15" => Some(Self::T15),
            _ => None,
        }
    }

    /// Only the exact criterion can certify that no factor exists.
    pub fn is_exact(self) -> bool {
        self == Self::T11
    }
}

impl fmt::Display for Theorem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Self::T11 => "1.1",
            Self::T12 => "1.2",
            Self::T13 => "1.3",
            Self::T14 => "1.4",
            Self::T15 => "1.5",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Witness {
    /// A deficiency maximizer `S` with `i(G−S)` and `2·i(G−S) − (2k+1)|S|`.
    ViolatingSet {
        set: VertexSet,
        isolated: usize,
        value: i64,
    },
    /// The extreme nonzero-side Laplacian eigenvalues `μ₁` and `μ_{n−1}`.
    Eigenvalues {
        mu1: f64,
        mu_n_minus_1: f64,
    },
    EdgeCount {
        edges: usize,
        threshold: usize,
    },
    /// An independent set of the required size whose degrees all fall
    /// below `2n/(2k+3)`.
    IndependentSet {
        vertices: Vec<usize>,
        degrees: Vec<usize>,
    },
    /// Largest independent set among low-degree vertices is smaller than
    /// the required size, so no violating set exists.
    LowDegreeIndependence {
        set_size: usize,
        low_degree_alpha: usize,
    },
    DegreeIndependence {
        min_degree: usize,
        alpha: usize,
    },
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum Status {
    NotApplicable { reason: String },
    Evaluated { holds: bool, witness: Witness },
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ConditionVerdict {
    pub theorem: Theorem,
    pub k: usize,
    pub status: Status,
}

impl ConditionVerdict {
    pub fn not_applicable(theorem: Theorem, k: usize, reason: impl Into<String>) -> Self {
        Self {
            theorem,
            k,
            status: Status::NotApplicable {
                reason: reason.into(),
            },
        }
    }

    pub fn evaluated(theorem: Theorem, k: usize, holds: bool, witness: Witness) -> Self {
        Self {
            theorem,
            k,
            status: Status::Evaluated { holds, witness },
        }
    }

    pub fn applicable(&self) -> bool {
        matches!(self.status, Status::Evaluated { .. })
    }

    /// `None` when the preconditions are not met.
    pub fn holds(&self) -> Option<bool> {
        match self.status {
            Status::Evaluated { holds, .. } => Some(holds),
            Status::NotApplicable { .. } => None,
        }
    }

    pub fn witness(&self) -> Option<&Witness> {
        match &self.status {
            Status::Evaluated { witness, .. } => Some(witness),
            Status::NotApplicable { .. } => None,
        }
    }

    /// Applicable and satisfied, i.e. the condition guarantees a factor.
    pub fn implies_factor(&self) -> bool {
        self.holds() == Some(true)
    }
}
