use thiserror::Error;

/// Every failure the library can report.
///
/// [`Error::is_check_failure`] separates a failed mathematical check from an
/// operational problem (bad input, capacity); the CLI maps them to different
/// exit codes.
#[derive(Debug, Error)]
pub enum Error {
    #[error("unsupported field size {0}; supported sizes are 2, 3, 4, 5, 7, 8, 9")]
    UnsupportedField(u32),
    #[error("field element {value} out of range for GF({q})")]
    ElementOutOfRange { value: u32, q: u32 },
    #[error("division by zero: {0}")]
    DivisionByZero(String),
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("generator matrix has rank {rank}, expected {k}")]
    RankDeficient { rank: usize, k: usize },
    #[error("invalid code parameters: {0}")]
    InvalidParameters(String),
    #[error("capacity exceeded: {0}")]
    Capacity(String),
    #[error("invalid weight distribution: {0}")]
    InvalidDistribution(String),
    #[error("inconsistent system: {0}")]
    Inconsistent(String),
    #[error("check failed: {0}")]
    CheckFailed(String),
    #[error("structural error: {0}")]
    Structural(String),
    #[error("numerical failure: {0}")]
    Numerical(String),
    #[error("no extremal enumerator exists for q={q}, c={c}, n={n}")]
    Infeasible { q: u32, c: u32, n: usize },
    #[error("enumerator not unique at d={d}: solution space has dimension {dimension}")]
    Ambiguous { d: usize, dimension: usize },
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    /// True for errors that signal a failed identity or theorem check.
    pub fn is_check_failure(&self) -> bool {
        matches!(
            self,
            Error::Inconsistent(_) | Error::CheckFailed(_) | Error::Structural(_)
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;
