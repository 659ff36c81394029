use num_bigint::BigInt;
use thiserror::Error;

/// Errors raised by the sequence, triangle, closed-form and oracle routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("argument out of domain: {0}")]
    Domain(String),

    #[error("sequence `{label}` must start with 1, found {found}")]
    BadHead { label: String, found: BigInt },

    #[error("sequence `{label}` has {len} terms, {needed} required")]
    TooShort { label: String, len: usize, needed: usize },

    /// A formula that is supposed to produce an integer did not.
    #[error("inexact division in {context}: {numerator} / {denominator}")]
    InexactDivision {
        context: &'static str,
        numerator: BigInt,
        denominator: BigInt,
    },

    #[error("{what} = {requested} exceeds the enumeration bound {limit}")]
    ResourceBound {
        what: &'static str,
        requested: usize,
        limit: usize,
    },

    #[error("invalid word `{0}`")]
    InvalidWord(String),

    #[error("hill colour {0} is outside {{1, 2}}")]
    InvalidColor(u8),

    #[error("unknown identity `{0}`")]
    UnknownIdentity(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain(msg: impl Into<String>) -> Error {
    Error::Domain(msg.into())
}
