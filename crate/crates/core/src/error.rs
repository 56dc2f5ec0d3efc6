use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("invalid cube: {0}")]
    InvalidCube(String),

    #[error("integer overflow in lattice arithmetic")]
    Overflow,

    #[error("precondition violated: {0}")]
    Precondition(String),

    /// A corner or bound search kept growing past its guard on `axis`.
    /// Under an oracle set that cannot certify infinity, this is how an
    /// unbounded target shows up.
    #[error("search along axis {axis} did not terminate (unbounded target?)")]
    Unbounded { axis: usize },

    #[error("oracle protocol violation: {0}")]
    Protocol(String),

    #[error("adversary script exhausted")]
    ScriptExhausted,

    #[error("no decomposition found within budget of {limit} iterations")]
    Budget { limit: u64 },

    #[error("timed out")]
    Timeout,

    #[error("invalid configuration: {0}")]
    Config(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("solver failure: {0}")]
    Solver(String),

    #[error("solver answered unknown")]
    SolverUnknown,

    #[error("enumeration budget of {0} nodes exceeded")]
    EnumerationBudget(u64),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    /// Process exit status used by the command-line front end.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Parse(_) | Error::Json(_) | Error::Config(_) | Error::InvalidCube(_) => 2,
            Error::DimensionMismatch { .. } => 2,
            Error::Budget { .. } | Error::Unbounded { .. } => 4,
            Error::Timeout => 5,
            Error::Protocol(_)
            | Error::ScriptExhausted
            | Error::Solver(_)
            | Error::SolverUnknown
            | Error::EnumerationBudget(_)
            | Error::Io(_)
            | Error::Precondition(_)
            | Error::Overflow => 3,
        }
    }
}

pub(crate) fn check_dim(expected: usize, found: usize) -> Result<()> {
    if expected == found {
        Ok(())
    } else {
        Err(Error::DimensionMismatch { expected, found })
    }
}
