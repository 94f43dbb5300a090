use alloc::string::String;

use thiserror::Error;

use crate::field::FieldSpec;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),

    #[error("division by zero")]
    DivisionByZero,

    #[error("field mismatch: {0} vs {1}")]
    FieldMismatch(FieldSpec, FieldSpec),

    #[error("{0} is infinite")]
    InfiniteField(FieldSpec),

    #[error("unsupported field {field}: {reason}")]
    UnsupportedField {
        field: FieldSpec,
        reason: &'static str,
    },

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("term {0} is not in the span of X1..X9")]
    NotInXSpan(String),

    #[error("singular transform (determinant is zero)")]
    Singular,

    #[error("algebra is not {0}; outside the classification domain")]
    NotClassifiable(&'static str),

    #[error("internal check failed: {0}")]
    Internal(String),
}

impl Error {
    pub(crate) fn parse(msg: impl Into<String>) -> Self {
        Error::Parse(msg.into())
    }
}
