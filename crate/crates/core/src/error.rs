use thiserror::Error;

/// Errors raised while constructing or checking graphs and certificates.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("edge {index} is a self-loop on vertex {vertex}")]
    SelfLoop { index: usize, vertex: usize },

    #[error("edge {index} ({u}, {v}) has an endpoint outside 0..{n}")]
    EndpointOutOfRange {
        index: usize,
        u: usize,
        v: usize,
        n: usize,
    },

    #[error("edge {index} ({u}, {v}) duplicates an earlier edge")]
    DuplicateEdge { index: usize, u: usize, v: usize },

    #[error("G_k needs k >= 2, got k = {0}")]
    KTooSmall(usize),

    #[error("{field}: expected {expected} entries, found {found}")]
    Misaligned {
        field: &'static str,
        expected: usize,
        found: usize,
    },

    #[error("order is not a permutation of 0..{n}: {detail}")]
    NotAPermutation { n: usize, detail: String },

    #[error("segment with both endpoints at ({x}, {y}) has zero length")]
    DegenerateSegment { x: i64, y: i64 },

    #[error("edges {0:?} and {1:?} are the same chord")]
    IdenticalChords((usize, usize), (usize, usize)),

    #[error("vertex {vertex} does not appear in the spine order")]
    UnknownVertex { vertex: usize },

    #[error("block size {block_size} must lie in 1..={k}")]
    InvalidBlockSize { block_size: usize, k: usize },

    #[error("clique size must be at least 2, got {0}")]
    InvalidCliqueSize(usize),

    #[error("page count must be at least 1")]
    ZeroPages,

    #[error("label of vertex {vertex} is inconsistent: {detail}")]
    BadLabel { vertex: usize, detail: String },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
