use alloc::string::String;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for a graph of order {order}")]
    InvalidVertex { vertex: usize, order: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("invalid order {order} for {kind}")]
    InvalidOrder { kind: &'static str, order: usize },
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),
    #[error("star bound k must be at least 2, got {0}")]
    InvalidK(usize),
    #[error("operation undefined on the empty graph")]
    EmptyGraph,
    #[error("numeric error: {0}")]
    NumericError(String),
    #[error("eigensolver did not converge after {sweeps} sweeps (off-diagonal norm {off_norm:e})")]
    ConvergenceError { sweeps: usize, off_norm: f64 },
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("graph is not a tree")]
    NotATree,
    #[error("graph is not connected")]
    NotConnected,
    #[error("order {order} exceeds catalog maximum order {max_order}")]
    CatalogTooSmall { order: usize, max_order: usize },
    #[error("order {order} exceeds the search cap {cap}")]
    TooLarge { order: usize, cap: usize },
}

/// First reason a factor certificate is rejected.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CertificateError {
    #[error("not a partition: vertex {0} is covered {1} times")]
    NotAPartition(usize, usize),
    #[error("block {0} contains a vertex outside the graph")]
    VertexOutOfRange(usize),
    #[error("block {block}: edge ({u},{v}) is not an edge of the graph")]
    EdgeNotInGraph { block: usize, u: usize, v: usize },
    #[error("block {block}: edge ({u},{v}) leaves the block")]
    EdgeOutsideBlock { block: usize, u: usize, v: usize },
    #[error("block {block}: star size {size} exceeds k = {k}")]
    StarTooLarge { block: usize, size: usize, k: usize },
    #[error("block {0}: edges do not form the declared star")]
    NotAStar(usize),
    #[error("block {0}: edges do not form a spanning tree of the block")]
    NotASpanningTree(usize),
    #[error("block {0}: tree code does not match the declared family member")]
    CodeMismatch(usize),
    #[error("block {0}: declared member is not in the catalog")]
    NotInCatalog(usize),
    #[error("block {block}: order {order} exceeds catalog maximum order")]
    CatalogTooSmall { block: usize, order: usize },
}
