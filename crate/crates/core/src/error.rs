use thiserror::Error;

/// Why a line of an edge-list file was rejected.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseErrorKind {
    #[error("malformed line {text:?}")]
    Malformed { text: String },
    #[error("missing node count")]
    MissingNodeCount,
    #[error("node id {id} out of range for {n} nodes")]
    NodeOutOfRange { id: usize, n: usize },
    #[error("self-loop on node {node}")]
    SelfLoop { node: usize },
    #[error("duplicate edge {u}-{v}")]
    DuplicateEdge { u: usize, v: usize },
    #[error("node count {n} is below 2")]
    TooFewNodes { n: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("line {line}: {kind}")]
    Parse { line: usize, kind: ParseErrorKind },
    #[error("invalid alpha array {text:?}: {reason}")]
    AlphaSyntax { text: String, reason: String },
    #[error("graph needs at least {min} nodes, got {n}")]
    TooFewNodes { n: usize, min: usize },
    #[error("edge {u}-{v} is invalid for a graph on {n} nodes")]
    InvalidEdge { u: usize, v: usize, n: usize },
    #[error("duplicate edge {u}-{v}")]
    DuplicateEdge { u: usize, v: usize },
    #[error("graph is not connected")]
    Disconnected,
    #[error("alpha array total is {found}, expected {expected}")]
    TotalMismatch { expected: u64, found: u64 },
    #[error("sequence lengths differ ({left} vs {right})")]
    LengthMismatch { left: usize, right: usize },
    #[error("sequence totals differ ({left} vs {right})")]
    TotalsDiffer { left: u64, right: u64 },
    #[error("sequence is empty")]
    Empty,
    #[error("sequence has zero total")]
    ZeroTotal,
    #[error("node count {n} is outside the supported range {min}..={max}")]
    UnsupportedSize { n: usize, min: usize, max: usize },
    #[error("invalid range: {0}")]
    InvalidRange(String),
    #[error("arithmetic overflow")]
    Overflow,
}

pub type Result<T> = std::result::Result<T, Error>;
