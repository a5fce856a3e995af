//! Error type shared by all core operations.

use alloc::string::String;
use core::fmt;

pub type Result<T> = core::result::Result<T, Error>;

/// Failure modes of the core pipeline.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Structural problem with the input table (duplicate headers, empty
    /// input, all-missing column, unusable label column).
    Schema(String),
    /// A column could not be imputed.
    Imputation(String),
    /// An argument is out of its documented range.
    Parameter(String),
    /// An input matrix does not match the expected width.
    DimensionMismatch { expected: usize, actual: usize },
    /// The label column encodes fewer than two classes.
    DegenerateLabels(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Schema(msg) => write!(f, "schema error: {msg}"),
            Error::Imputation(msg) => write!(f, "imputation error: {msg}"),
            Error::Parameter(msg) => write!(f, "parameter error: {msg}"),
            Error::DimensionMismatch { expected, actual } => {
                write!(f, "dimension mismatch: expected {expected} columns, got {actual}")
            }
            Error::DegenerateLabels(msg) => write!(f, "degenerate labels: {msg}"),
        }
    }
}

impl core::error::Error for Error {}
