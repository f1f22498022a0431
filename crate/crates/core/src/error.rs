use thiserror::Error;

/// Errors raised by graph operations, decompositions and pipelines.
///
/// Structural *violations* found by validators (tree decompositions,
/// minor models, orthogonality) are not errors; they are returned as
/// report values by the corresponding `validate_*` functions.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("empty graph")]
    EmptyGraph,
    #[error("vertex {vertex} out of range for graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),
    #[error("edge {0}-{1} is not an edge of the graph")]
    MissingEdge(usize, usize),
    #[error("part {0} not connected")]
    PartNotConnected(usize),
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("graph with {n} vertices too large for exact oracle (budget {budget})")]
    TooLargeForExact { n: usize, budget: usize },
    #[error("invalid tree decomposition: {0}")]
    InvalidDecomposition(String),
    #[error("invalid tree-partition: {0}")]
    InvalidTreePartition(String),
    #[error("coloring host mismatch")]
    HostMismatch,
    #[error("embedding violates product structure at edge {0}-{1}")]
    NotAProductEmbedding(usize, usize),
    #[error("color class {class} has treewidth {width} > {bound}")]
    ClassTooWide {
        class: usize,
        width: usize,
        bound: usize,
    },
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("witness invariant ({item}) failed at level {level}: {detail}")]
    WitnessInvariant {
        level: usize,
        item: u8,
        detail: String,
    },
    #[error("sparsifier invariant failed: {0}")]
    SparsifyInvariant(String),
    #[error("{path}: {msg}")]
    Io { path: String, msg: String },
    #[error("config field `{field}`: {msg}")]
    Config { field: String, msg: String },
}

pub type Result<T> = std::result::Result<T, Error>;
