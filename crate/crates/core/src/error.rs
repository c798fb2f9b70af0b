use std::path::PathBuf;

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Every failure the library can report.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("invalid approximation region: left radius {left}, right radius {right}")]
    InvalidRegion { left: f64, right: f64 },

    #[error("degree {0} is outside [0, 1]")]
    InvalidDegree(f64),

    #[error("cannot invert degree {degree} on a zero-radius side")]
    ZeroRadiusSide { degree: f64 },

    #[error("empty input")]
    EmptyInput,

    #[error("axis {axis}: {reason}")]
    InvalidAxis { axis: usize, reason: String },

    #[error("value tensor has {actual} entries, axes require {expected}")]
    ShapeMismatch { expected: usize, actual: usize },

    #[error("non-finite value at flat position {0}")]
    NonFiniteValue(usize),

    #[error("index {index} out of range for axis {axis} with {len} nodes")]
    IndexOutOfRange { axis: usize, index: usize, len: usize },

    #[error("expected dimension {expected}, got {actual}")]
    DimensionMismatch { expected: usize, actual: usize },

    #[error("component {axis} = {value} lies outside [{lo}, {hi}]")]
    OutOfDomain { axis: usize, value: f64, lo: f64, hi: f64 },

    #[error("interpolation nodes coincide at {0}")]
    DegenerateNodes(f64),

    #[error("examples do not form a complete grid: {present} of {expected} combinations present")]
    IncompleteGrid { expected: usize, present: usize },

    #[error("duplicate example point at row {0}")]
    DuplicatePoint(usize),

    #[error("invalid radii: {0}")]
    InvalidRadii(String),

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse { line: u64, column: usize, message: String },

    #[error("file is empty")]
    EmptyFile,

    #[error("model format version {found} is not supported (this build reads major version {supported})")]
    SchemaVersionMismatch { found: String, supported: u32 },

    #[error("corrupt model file: {0}")]
    CorruptFile(String),

    #[error("invalid specification: {0}")]
    InvalidSpec(String),

    #[error("unknown function '{0}'")]
    UnknownFunction(String),

    #[error("unsupported dimension {0}")]
    UnsupportedDimension(usize),

    #[error("{path}: {message}")]
    Io { path: PathBuf, message: String },
}

/// Coarse error classes, used by front ends to pick exit codes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorClass {
    Io,
    Format,
    Data,
    Domain,
    Unsupported,
}

impl Error {
    pub fn class(&self) -> ErrorClass {
        match self {
            Error::Io { .. } => ErrorClass::Io,
            Error::Parse { .. }
            | Error::EmptyFile
            | Error::SchemaVersionMismatch { .. }
            | Error::CorruptFile(_)
            | Error::InvalidSpec(_) => ErrorClass::Format,
            Error::OutOfDomain { .. } => ErrorClass::Domain,
            Error::UnknownFunction(_) | Error::UnsupportedDimension(_) => ErrorClass::Unsupported,
            _ => ErrorClass::Data,
        }
    }

    pub(crate) fn io(path: impl Into<PathBuf>, err: std::io::Error) -> Self {
        Error::Io {
            path: path.into(),
            message: err.to_string(),
        }
    }
}
