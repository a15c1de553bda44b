use thiserror::Error;

/// Errors raised by the library.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("word of length {len} exceeds the oracle limit of {max}")]
    InputTooLong { len: usize, max: usize },

    #[error("words have different lengths ({left} vs {right})")]
    LengthMismatch { left: usize, right: usize },

    #[error("duplicate word `{0}`")]
    DuplicateWord(String),

    #[error("invalid weights: {0}")]
    InvalidWeights(String),

    #[error("invalid rational `{0}`")]
    InvalidRational(String),

    #[error("invalid symbol {0:?}: symbols are printable ASCII, not whitespace, not '#'")]
    InvalidSymbol(char),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("graph is not cubic: vertex {vertex} has degree {degree}")]
    NotCubic { vertex: usize, degree: usize },

    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("depth {depth} exceeds the number of supplied graphs ({graphs})")]
    DepthExceedsGraphs { depth: usize, graphs: usize },

    #[error("parameters too large: {0}")]
    ParametersTooLarge(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("words of the language do not share a common length")]
    NonUniformLength,

    #[error("hypothesis violated: {0}")]
    HypothesisViolated(String),

    #[error("degree {degree} exceeds the limit of {max}")]
    DegreeTooLarge { degree: usize, max: usize },

    #[error("degree mismatch ({left} vs {right})")]
    DegreeMismatch { left: usize, right: usize },

    #[error("group order {order} exceeds the cap of {cap}")]
    GroupTooLarge { order: String, cap: usize },

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("unknown graph `{0}`")]
    UnknownGraph(String),

    #[error("{0}")]
    Io(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
