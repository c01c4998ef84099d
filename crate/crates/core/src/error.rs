use thiserror::Error;

use crate::frontend::dsl::ParseError;
use crate::lie::Validation;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("invalid Lie algebra: {0}")]
    InvalidAlgebra(Validation),

    #[error("no witness covector exists: {0}")]
    NoWitness(String),

    #[error("catalog: {0}")]
    Catalog(String),

    #[error("out of scope: {0}")]
    OutOfScope(String),

    #[error("internal inconsistency: {0}")]
    Internal(String),

    #[error(transparent)]
    Parse(#[from] ParseError),
}

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidInput(msg.into())
    }

    pub(crate) fn check_dim(expected: usize, found: usize) -> Result<()> {
        if expected == found {
            Ok(())
        } else {
            Err(Error::DimensionMismatch { expected, found })
        }
    }
}
