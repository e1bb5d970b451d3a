use thiserror::Error;

use crate::exact::MultiPoly;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Error categories surfaced to callers (and mapped to CLI exit codes).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Category {
    Precondition,
    Inconsistency,
    Unsupported,
}

impl Category {
    pub fn as_str(self) -> &'static str {
        match self {
            Category::Precondition => "precondition",
            Category::Inconsistency => "inconsistency",
            Category::Unsupported => "unsupported",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("variable count mismatch: {0} vs {1}")]
    VariableMismatch(usize, usize),
    #[error("division by the zero polynomial")]
    ZeroDivisor,
    #[error("not divisible, remainder {remainder}")]
    NotDivisible { remainder: MultiPoly },
    #[error("parse error: {0}")]
    Parse(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("inconsistency: {0}")]
    Inconsistency(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
}

impl Error {
    pub fn precondition(msg: impl Into<String>) -> Self {
        Error::Precondition(msg.into())
    }

    pub fn inconsistency(msg: impl Into<String>) -> Self {
        Error::Inconsistency(msg.into())
    }

    pub fn unsupported(msg: impl Into<String>) -> Self {
        Error::Unsupported(msg.into())
    }

    pub fn category(&self) -> Category {
        match self {
            Error::Inconsistency(_) => Category::Inconsistency,
            Error::Unsupported(_) => Category::Unsupported,
            _ => Category::Precondition,
        }
    }
}
