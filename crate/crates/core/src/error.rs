use thiserror::Error;

use crate::ring::Mode;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("genus must be at least 2, got {0}")]
    InvalidGenus(i64),

    #[error("malformed truncation window [{e_min}, {e_max}]")]
    InvalidWindow { e_min: i64, e_max: i64 },

    #[error("domain error: {0}")]
    Domain(String),

    #[error("operands live in different contexts: {0}")]
    ContextMismatch(String),

    #[error("operation not defined in {mode} mode: {detail}")]
    Contract { mode: Mode, detail: String },

    #[error("exponent {exponent} lies outside the window [{e_min}, {e_max}]")]
    OutOfWindow { exponent: i64, e_min: i64, e_max: i64 },

    #[error("effective windows [{0}, {1}] and [{2}, {3}] do not overlap")]
    EmptyWindow(i64, i64, i64, i64),

    #[error("invariant violated: {0}")]
    Invariant(String),

    #[error("oracle integrity failure: {0}")]
    Oracle(String),

    #[error("invalid configuration: {0}")]
    Config(String),
}

pub type Result<T> = std::result::Result<T, Error>;
