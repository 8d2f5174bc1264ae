use alloc::string::String;
use core::fmt;

/// Broad classification of failures, stable enough to be reported by
/// front ends as a machine-readable string.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ErrorKind {
    InvalidInput,
    Resource,
    Arithmetic,
    NonRationalWeights,
    Structural,
    InvalidReference,
    Internal,
}

impl ErrorKind {
    pub fn as_str(self) -> &'static str {
        match self {
            ErrorKind::InvalidInput => "invalid-input",
            ErrorKind::Resource => "resource",
            ErrorKind::Arithmetic => "arithmetic",
            ErrorKind::NonRationalWeights => "non-rational-weights",
            ErrorKind::Structural => "structural",
            ErrorKind::InvalidReference => "invalid-reference",
            ErrorKind::Internal => "internal",
        }
    }
}

impl fmt::Display for ErrorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    InvalidInput(String),
    /// An enumeration would exceed the configured size bound.
    ResourceLimit { what: &'static str, size: u64, limit: u64 },
    DivisionByZero,
    NonRationalWeights { index: usize },
    /// Operands live on different groups or have the wrong shape.
    Mismatch(String),
    InvalidReference(String),
    /// An internal consistency check failed. This indicates a bug.
    Inconsistent(String),
}

impl Error {
    pub fn kind(&self) -> ErrorKind {
        match self {
            Error::InvalidInput(_) => ErrorKind::InvalidInput,
            Error::ResourceLimit { .. } => ErrorKind::Resource,
            Error::DivisionByZero => ErrorKind::Arithmetic,
            Error::NonRationalWeights { .. } => ErrorKind::NonRationalWeights,
            Error::Mismatch(_) => ErrorKind::Structural,
            Error::InvalidReference(_) => ErrorKind::InvalidReference,
            Error::Inconsistent(_) => ErrorKind::Internal,
        }
    }
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidInput(msg) => write!(f, "invalid input: {msg}"),
            Error::ResourceLimit { what, size, limit } => {
                write!(f, "{what}: size {size} exceeds the enumeration bound {limit}")
            }
            Error::DivisionByZero => f.write_str("division by zero"),
            Error::NonRationalWeights { index } => write!(
                f,
                "inverse transform is not rational at element index {index}"
            ),
            Error::Mismatch(msg) => write!(f, "structural mismatch: {msg}"),
            Error::InvalidReference(msg) => write!(f, "invalid reference: {msg}"),
            Error::Inconsistent(msg) => write!(f, "internal consistency check failed: {msg}"),
        }
    }
}

impl core::error::Error for Error {}

pub type Result<T> = core::result::Result<T, Error>;
