use thiserror::Error;

use crate::rational::Rational;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("order mismatch: {left} vs {right}")]
    OrderMismatch { left: usize, right: usize },

    #[error("length mismatch: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },

    #[error("non-invertible series: constant term is zero")]
    NonInvertible,

    #[error("constant term is {0}, expected 1; normalize first")]
    NormalizeFirst(Rational),

    #[error("operation needs order >= {needed}, got {got}")]
    OrderTooLow { needed: usize, got: usize },

    #[error("sequence needs at least {needed} entries, got {got}")]
    TooShort { needed: usize, got: usize },

    #[error("invalid hypergeometric parameter c = {0}: must not be zero or a negative integer")]
    InvalidHypergeomC(Rational),

    #[error("{what}: entry {index} is {value}, expected a positive value")]
    NonPositive {
        what: &'static str,
        index: usize,
        value: Rational,
    },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    /// A theorem hypothesis or operation precondition failed. `index` points
    /// at the first offending position when the condition is about a sequence.
    #[error("precondition failed: {message}{}", .index.map(|i| format!(" (index {i})")).unwrap_or_default())]
    Precondition {
        message: String,
        index: Option<usize>,
    },

    #[error("unknown series name: {0}")]
    UnknownSeries(String),

    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    pub(crate) fn precondition(message: impl Into<String>, index: Option<usize>) -> Self {
        Error::Precondition {
            message: message.into(),
            index,
        }
    }

    /// True for failures of a mathematical precondition, as opposed to
    /// malformed input.
    pub fn is_precondition(&self) -> bool {
        !matches!(
            self,
            Error::Parse(_) | Error::UnknownSeries(_) | Error::InvalidParameter(_)
        )
    }
}
