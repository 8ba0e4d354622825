//! File formats, corpus tools, sweeps and the `compfactor` command line for
//! the `compfactor-core` crate.

pub mod app;
pub mod corpus;
pub mod format;
pub mod sweep;

pub use format::{
    parse_auto, parse_edge_list, parse_graph6, write_edge_list, write_graph6, FormatError,
};
