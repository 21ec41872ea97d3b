use std::fmt;

/// Errors produced by the engine's fallible operations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Two vectors of different lengths were combined.
    DimensionMismatch { expected: usize, found: usize },
    /// Two vectors in different coordinate bases were combined.
    BasisMismatch,
    /// An index (residue point, shuffle slot, ...) is outside its valid range.
    IndexOutOfRange { what: &'static str },
    /// An L-symbol of the wrong kind or level was passed to an expansion.
    UnsupportedExpansion(String),
    /// An analytic-order query was made on an expression that still contains
    /// Speh-level symbols.
    SpehTermPresent,
    /// A block permutation was not a bijection of {1..b}.
    InvalidPermutation,
    /// A constant-term expansion was requested deeper than the rank allows.
    DepthExceedsRank { depth: u32, b: u32 },
    /// Malformed textual input (rationals, vectors).
    Parse(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::DimensionMismatch { expected, found } => {
                write!(f, "dimension mismatch: expected {expected}, found {found}")
            }
            Error::BasisMismatch => write!(f, "coordinate basis mismatch"),
            Error::IndexOutOfRange { what } => write!(f, "index out of range: {what}"),
            Error::UnsupportedExpansion(what) => write!(f, "unsupported expansion: {what}"),
            Error::SpehTermPresent => {
                write!(f, "expression contains Speh-level symbols; expand first")
            }
            Error::InvalidPermutation => write!(f, "images do not form a permutation"),
            Error::DepthExceedsRank { depth, b } => {
                write!(f, "expansion depth {depth} exceeds rank bound {} for b={b}", b - 1)
            }
            Error::Parse(msg) => write!(f, "parse error: {msg}"),
        }
    }
}

impl std::error::Error for Error {}
