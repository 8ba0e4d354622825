//! Component factors with stars `K_{1,1}, ..., K_{1,k}` and the tree family
//! `T(2k+1)`.
//!
//! The crate is `no_std` (it needs `alloc`). It decides factor existence
//! exactly through the isolated-vertex deficiency
//! `max_S 2·i(G−S) − (2k+1)|S|`, evaluates four sufficient conditions
//! (Laplacian eigenvalues, edge count, degrees over independent sets,
//! minimum degree against independence number), builds explicit factor
//! certificates by backtracking, and constructs the extremal graphs that
//! show those conditions are tight.
//!
//! File formats, the command-line tool and corpus sweeps live in the
//! `compfactor` companion crate.

#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod builder;
pub mod error;
pub mod extremal;
pub mod factor;
pub mod graph;
pub mod spectral;
pub mod tree;
pub mod verdict;

pub use builder::{
    find_factor, spanning_trees, verify_certificate, Block, BlockKind, FactorCertificate,
};
pub use error::{CertificateError, Error, Result};
pub use factor::{deficiency, has_factor_thm11, DeficiencyReport, Limits};
pub use graph::{Graph, StandardKind, VertexSet};
pub use spectral::{eigenvalues_sym, laplacian, Spectrum, SymmetricMatrix};
pub use tree::{canonical_code, enumerate_catalog, BaseTreeWitness, TreeCatalog};
pub use verdict::{ConditionVerdict, Theorem, Witness};

/// Rejects star bounds below two; every operation in the crate needs `k ≥ 2`.
pub(crate) fn check_k(k: usize) -> Result<()> {
    if k < 2 {
        Err(Error::InvalidK(k))
    } else {
        Ok(())
    }
}
