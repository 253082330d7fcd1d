use thiserror::Error;

/// Errors raised by the library.
///
/// `Integrity` is reserved for conditions that the underlying theory rules
/// out (a division that should be exact, a Laurent residue in a quantity
/// that must be a polynomial). Seeing one means a bug or corrupt input that
/// slipped past validation.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, got {got}")]
    Dimension { expected: usize, got: usize },

    #[error("invalid structure: {0}")]
    Structure(String),

    #[error("cone is not Gorenstein")]
    NotGorenstein,

    #[error("not a nef-partition: {0}")]
    NotNefPartition(String),

    #[error("invalid argument: {0}")]
    Argument(String),

    #[error("integrity violation: {0}")]
    Integrity(String),

    #[error("integer overflow in lattice point enumeration")]
    Overflow,
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn structure(msg: impl Into<String>) -> Self {
        Error::Structure(msg.into())
    }

    pub(crate) fn integrity(msg: impl Into<String>) -> Self {
        Error::Integrity(msg.into())
    }
}
