use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("line {line}: entries sum to {sum}, expected {n}")]
    SumMismatch { line: usize, sum: i64, n: usize },
    #[error("line {line}: entry {value} is not positive")]
    NonPositiveEntry { line: usize, value: i64 },
    #[error("line {line}: cycle {cycle} duplicates an earlier cycle")]
    DuplicateCycle { line: usize, cycle: String },
    #[error("line {line}: expected {expected} entries, found {found}")]
    WrongEntryCount { line: usize, expected: usize, found: usize },
    #[error("line {line}: {msg}")]
    Syntax { line: usize, msg: String },
    #[error("missing `n=<int> d=<int>` header")]
    MissingHeader,
    #[error("input contains no data")]
    EmptyInput,
    #[error("facets of mixed dimensions ({0} and {1})")]
    MixedDimensions(usize, usize),
    #[error("vertex {vertex} out of range for n = {n}")]
    VertexOutOfRange { vertex: u32, n: usize },
    #[error("vertex universe of size {0} is not supported (max 64)")]
    UniverseTooLarge(usize),
    #[error("{0} is not a face of the complex")]
    NotAFace(String),
    #[error("vertex count must be even, got {0}")]
    OddVertexCount(usize),
    #[error("expected an f-vector of length {expected}, got {found}")]
    FVectorLength { expected: usize, found: usize },
    #[error("expected a {expected}-dimensional complex, got dimension {found:?}")]
    WrongDimension { expected: usize, found: Option<usize> },
    #[error("complex is not pure")]
    NotPure,
    #[error("invalid vertex partition: {0}")]
    InvalidPartition(String),
    #[error("expected {expected} vertices, got {found}")]
    WrongVertexCount { expected: usize, found: usize },
    #[error("vertex of degree {degree} in the link of {edge}; valence vectors cover degrees 3..=6")]
    ValenceOutOfRange { edge: String, degree: usize },
    #[error("invalid pairing: {0}")]
    InvalidPairing(String),
    #[error("ridge {0} lies in more than two facets")]
    RidgeDegree(String),
    #[error("the cyclic shift is not an automorphism")]
    NotCyclic,
    #[error("group order {order} exceeds the element cap {cap}")]
    GroupTooLarge { order: usize, cap: usize },
    #[error("intersection form precondition violated: {0}")]
    FormPrecondition(String),
    #[error("invalid search configuration: {0}")]
    InvalidConfig(String),
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),
    #[error("{0}")]
    Io(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
