use thiserror::Error;

/// Errors shared across the library.
#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// An input exceeds an enumeration or recursion guard.
    #[error("capacity exceeded: {what} is {actual}, limit {limit}")]
    Capacity {
        what: &'static str,
        limit: usize,
        actual: usize,
    },

    /// Interpolation nodes must be pairwise distinct.
    #[error("duplicate interpolation node {0}")]
    DuplicateNode(String),

    /// The requested evaluation point is outside the operation's domain.
    #[error("unsupported point: {0}")]
    UnsupportedPoint(String),

    /// A weight shift is undefined at the given parameters.
    #[error("degenerate shift: {0}")]
    DegenerateShift(String),

    /// A parameter lies outside the admissible range of a generator.
    #[error("out of range: {0}")]
    RangeError(String),

    /// A generated family failed its construction-time verification.
    #[error("construction failed: {0}")]
    ConstructionError(String),

    /// A uniqueness promise was violated (residue 2 observed).
    #[error("promise violated: permanent residue 2 mod 3")]
    PromiseViolation,

    /// Malformed textual input.
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    /// Structurally invalid argument.
    #[error("invalid input: {0}")]
    InvalidInput(String),
}

pub type Result<T> = std::result::Result<T, Error>;
