use thiserror::Error;

/// Errors reported by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("no main variable: polynomial is constant")]
    NoMainVariable,
    #[error("variable y{0} does not occur in either polynomial")]
    VariableAbsent(usize),
    #[error("degree precondition violated: {0}")]
    Degree(String),
    #[error("zero polynomial")]
    ZeroPolynomial,
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("invalid variable order: {0}")]
    BadOrder(String),
    #[error("syntax error at line {line}, column {col}: {msg}")]
    Syntax { line: usize, col: usize, msg: String },
    #[error("dimension mismatch: expected {expected}, got {got}")]
    Dimension { expected: usize, got: usize },
    #[error("not a triangular set: {0}")]
    NotTriangular(String),
    #[error("not a regular chain: iterated resultant of the initials vanishes")]
    NotRegularChain,
    #[error("not a regular system: iterated resultant of the inequation vanishes")]
    NotRegularSystem,
    #[error("regular system is not squarefree")]
    NotSquarefree,
    #[error("zerodivisor input: polynomial is not regular modulo the saturated ideal")]
    Zerodivisor,
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
