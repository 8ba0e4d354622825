pub mod canonical;
pub mod family;

pub use canonical::{canonical_code, decode_code, free_trees, labeled_trees, prufer_decode};
pub use family::{
    construct_tr, enumerate_catalog, validate_base, BaseTreeWitness, Rejection, TreeCatalog,
};
