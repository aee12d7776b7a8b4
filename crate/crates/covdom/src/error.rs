//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    // -- graph construction -------------------------------------------------
    #[error("self-loop at vertex {vertex}; only simple graphs are supported")]
    SelfLoop { vertex: usize },
    #[error("duplicate edge {u}-{v}; edge lists must name each edge once")]
    DuplicateEdge { u: usize, v: usize },
    #[error("vertex {vertex} out of range for a graph of order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },
    #[error("a cycle needs at least 3 vertices, got {n}")]
    CycleTooShort { n: usize },
    #[error("operation undefined on the empty graph")]
    EmptyGraph,

    // -- text formats --------------------------------------------------------
    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("graph6: malformed header: {detail}")]
    Graph6MalformedHeader { detail: String },
    #[error("graph6: bit count mismatch: expected {expected} data characters, got {got}")]
    Graph6BitCountMismatch { expected: usize, got: usize },
    #[error("graph6: trailing garbage after the encoding: {detail}")]
    Graph6TrailingGarbage { detail: String },

    // -- covers ---------------------------------------------------------------
    #[error("fold count must be at least 1, got {k}")]
    FoldTooSmall { k: usize },
    #[error("base graph is disconnected; a k-fold cover is only defined over a connected base")]
    DisconnectedBase,
    #[error("voltage for edge {u}-{v} is not a permutation of 0..{k}")]
    VoltageNotPermutation { u: usize, v: usize, k: usize },
    #[error("voltage assignment does not match the base edge set: {detail}")]
    VoltageEdgeMismatch { detail: String },
    #[error("projection map has {got} entries but the total graph has {expected} vertices")]
    ProjectionLengthMismatch { expected: usize, got: usize },
    #[error("not a subgraph of the base: {detail}")]
    NotSubgraph { detail: String },
    #[error("projection fails verification: {verdict}")]
    InvalidProjection { verdict: String },

    // -- domination -----------------------------------------------------------
    #[error("vertex {vertex} is isolated; total domination needs minimum degree 1")]
    IsolatedVertex { vertex: usize },
    #[error("graph is disconnected; connected domination needs a connected graph")]
    Disconnected,
    #[error("brute force enumeration is limited to {max} vertices, got {n}")]
    TooLargeForBruteForce { n: usize, max: usize },
    #[error("diagonal perfect code needs n to be a positive multiple of 5, got {n}")]
    NotMultipleOfFive { n: usize },
    #[error("the given set is not a {kind} dominating set")]
    NotDominating { kind: String },

    // -- bounds ----------------------------------------------------------------
    #[error("harmonic number needs degree >= 1, got {d}")]
    HarmonicDegree { d: usize },
    #[error("exact harmonic arithmetic overflows i64 beyond degree {max}, got {d}")]
    HarmonicOverflow { d: usize, max: usize },
    #[error(
        "connector path of {len} edges exceeds the 3-edge limit; this contradicts the \
         cover structure and indicates a bug or an invalid projection"
    )]
    ConnectorPathTooLong { len: usize },
    #[error("exact solve on the base graph exhausted its budget; cannot certify bounds")]
    BaseSolveExhausted,

    // -- harness ----------------------------------------------------------------
    #[error("unknown fixture {name:?}; known fixtures: {known}")]
    UnknownFixture { name: String, known: String },
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
