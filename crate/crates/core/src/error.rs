use std::fmt;

/// Errors raised by constructors, basis operations, and text parsers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Composition parts must be positive.
    ZeroPart,
    /// Malformed composition or shape text.
    Parse(String),
    /// The inner shape is not contained in the outer shape.
    NotContained,
    /// The named argument must be a partition.
    NotPartition(&'static str),
    /// The outer shape is a partition, so no witness pair exists.
    OuterIsPartition,
    /// Both operands must carry the same basis.
    BasisMismatch,
    /// The element is not symmetric.
    NotSymmetric,
    /// A content size does not match the shape size.
    SizeMismatch,
    /// An index argument lies outside its allowed range.
    OutOfRange(String),
    /// Near-concatenation needs two nonempty compositions.
    EmptyArgument,
    /// The selected cells do not form a sub-shape.
    NotRestrictable,
    /// Adjacent vertices received equal colors.
    ImproperColoring,
    /// Invalid JSON for the requested type.
    Json(String),
    /// A stated precondition does not hold.
    Precondition(&'static str),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::ZeroPart => write!(f, "composition parts must be positive"),
            Error::Parse(s) => write!(f, "parse error: {s}"),
            Error::NotContained => write!(f, "inner shape is not contained in the outer shape"),
            Error::NotPartition(what) => write!(f, "{what} must be a partition"),
            Error::OuterIsPartition => {
                write!(f, "outer shape is a partition; no witness pair exists")
            }
            Error::BasisMismatch => write!(f, "operands carry different bases"),
            Error::NotSymmetric => write!(f, "element is not symmetric"),
            Error::SizeMismatch => write!(f, "content size does not match the shape size"),
            Error::OutOfRange(s) => write!(f, "argument out of range: {s}"),
            Error::EmptyArgument => write!(f, "near-concatenation needs nonempty compositions"),
            Error::NotRestrictable => write!(f, "selected cells do not form a sub-shape"),
            Error::ImproperColoring => write!(f, "coloring assigns equal colors to adjacent vertices"),
            Error::Json(s) => write!(f, "json error: {s}"),
            Error::Precondition(s) => write!(f, "precondition violated: {s}"),
        }
    }
}

impl std::error::Error for Error {}

pub type Result<T> = std::result::Result<T, Error>;
