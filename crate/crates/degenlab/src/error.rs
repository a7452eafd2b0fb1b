//! Error types shared across the crate.

use thiserror::Error;

/// Maximum number of planes accepted anywhere; keeps every derived invariant
/// (largest is on the order of m⁴) far inside `i128` range.
pub const MAX_PLANES: u32 = 1_000_000;

/// Hard bound on exact canonicalization, applied per connected component.
pub const CANON_VERTEX_BOUND: usize = 12;

/// A syntax error in one of the text formats, with a 1-based source position.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}, column {column}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

impl ParseError {
    pub fn new(line: usize, column: usize, message: impl Into<String>) -> Self {
        ParseError { line, column, message: message.into() }
    }
}

#[derive(Debug, Error)]
pub enum Error {
    #[error("plane count m={m} out of range (3 ≤ m ≤ {MAX_PLANES})")]
    PlaneCountOutOfRange { m: u64 },

    #[error("loop edge {v}-{v} is not a line of the arrangement")]
    LoopEdge { v: u32 },

    #[error("duplicate edge {i}-{j}")]
    DuplicateEdge { i: u32, j: u32 },

    #[error("plane index {index} out of range 1..={m}")]
    IndexOutOfRange { index: u64, m: u32 },

    #[error("graph uses {vertices} distinct vertices but only m={m} planes exist")]
    TooManyVertices { vertices: usize, m: u32 },

    #[error("{what} {value} exceeds the supported bound {bound}")]
    TooLarge { what: &'static str, value: usize, bound: usize },

    #[error("type search with dbar={dbar} is beyond the exhaustive bound and no constructive generator applies")]
    SearchSpaceTooLarge { dbar: i128 },

    #[error(transparent)]
    Parse(#[from] ParseError),

    #[error("negative count {name} = {value}: no such configuration exists")]
    NegativeCount { name: &'static str, value: i128 },

    #[error("negative genus {genus}: no irreducible curve of this type exists")]
    NegativeGenus { genus: i128 },

    #[error("the empty arrangement carries no curve")]
    EmptyCurve,

    #[error("type symbol admits several non-isomorphic graphs: {}", candidates.join(" ; "))]
    AmbiguousSymbol { candidates: Vec<String> },

    #[error("type symbol admits no realizable graph")]
    UnrealizableSymbol,

    #[error("internal inconsistency: {0}")]
    InternalInconsistency(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error("JSON: {0}")]
    Json(#[from] serde_json::Error),
}

impl Error {
    /// CLI exit code: 2 for capacity limits, 1 for everything else.
    pub fn exit_code(&self) -> u8 {
        match self {
            Error::TooLarge { .. } | Error::SearchSpaceTooLarge { .. } => 2,
            _ => 1,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
