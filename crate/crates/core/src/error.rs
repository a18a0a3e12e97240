use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{line}:{column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("letter 0 is not allowed; letters must be positive integers")]
    ZeroLetter,

    #[error("operation requires a nonempty word")]
    EmptyWord,

    #[error("unknown x{index} is out of range for {n} unknowns")]
    UnknownOutOfRange { index: usize, n: usize },

    #[error("expected {expected} unknowns, found {found}")]
    MismatchedUnknowns { expected: usize, found: usize },

    #[error("morphism does not solve the equation")]
    NotASolution,

    #[error("equations indistinguishable by minors: every 2x2 minor vanishes")]
    IndistinguishableByMinors,

    #[error("trivial equation where a nontrivial one is required")]
    TrivialEquation,

    #[error("equation has an empty side")]
    EmptySide,

    #[error("length type component {index} is negative ({value})")]
    NegativeLength { index: usize, value: i64 },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// An identity or theorem that must hold was observed to fail.
    #[error("check failed: {0}")]
    CheckFailed(String),
}

impl Error {
    pub(crate) fn parse(line: usize, column: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            column,
            message: message.into(),
        }
    }
}
