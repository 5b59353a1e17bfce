use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    /// An index fell outside the domain an operation accepts, or above a
    /// configured guard.
    #[error("{what}: {detail}")]
    Range { what: &'static str, detail: String },

    /// A structural property that must hold did not (odd binary partition
    /// term, gap in a b-file, ...).
    #[error("integrity error: {0}")]
    Integrity(String),

    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub(crate) fn guard(what: &'static str, n: impl std::fmt::Display, guard: usize) -> Self {
        Error::Range {
            what,
            detail: format!(
                "n = {n} exceeds the guard of {guard} (override with {})",
                crate::guard::GUARD_ENV
            ),
        }
    }

    pub(crate) fn range(what: &'static str, detail: impl Into<String>) -> Self {
        Error::Range {
            what,
            detail: detail.into(),
        }
    }
}
