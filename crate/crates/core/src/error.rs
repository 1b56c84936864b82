use thiserror::Error;

/// Errors raised by constructions and checks.
///
/// Budget overruns are never turned into silent truncation; they surface as
/// [`Error::BudgetExceeded`] and abort the enclosing check.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("budget exceeded: {0}")]
    BudgetExceeded(String),
    #[error("not bijective: {0}")]
    NotBijective(String),
    #[error("not unique: {0}")]
    NotUnique(String),
    #[error("no unit object found")]
    NoUnitFound,
    #[error("not closed: {0}")]
    NotClosed(String),
    #[error("mismatched endpoints: {0}")]
    Mismatch(String),
    #[error("malformed structure: {0}")]
    Malformed(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("io error: {0}")]
    Io(String),
}

impl Error {
    pub fn is_budget(&self) -> bool {
        matches!(self, Error::BudgetExceeded(_))
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Parse(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
