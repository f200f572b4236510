use thiserror::Error;

use crate::structures::Violation;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Every failure the library can report.
///
/// Variant names are part of the command-line contract: the CLI prints
/// them verbatim via [`Error::kind`].
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("unknown letter {letter:?} at position {position}")]
    UnknownLetter { letter: char, position: usize },
    #[error("unbalanced word {word:?}: {reason}")]
    UnbalancedWord { word: String, reason: String },
    #[error("the empty path has no primary decomposition")]
    EmptyPath,
    #[error("bound must be at least 1, got {0}")]
    InvalidBound(usize),
    #[error("{0} is not a concatenation of pyramids")]
    NotAFibonacciPath(String),
    #[error("colour system {0} only provides counts, not colours")]
    CountOnlySystem(String),
    #[error("invalid colouring: {0}")]
    InvalidColouring(String),
    #[error("colour {colour} is not a member of {system}")]
    WrongColourSystem { colour: String, system: String },
    #[error("{what} of size {size} exceeds the oracle limit {limit}")]
    SizeTooLarge {
        what: &'static str,
        size: usize,
        limit: usize,
    },
    #[error("not a non-crossing tree: {0}")]
    NotAnNCTree(Violation),
    #[error("not a non-crossing out-tree: {0}")]
    NotAnNCOTree(Violation),
    #[error("invalid partition: {0}")]
    InvalidPartition(Violation),
    #[error("invalid dissection: {0}")]
    InvalidDissection(Violation),
    #[error("{0} is not a little Schroeder path")]
    NotALittleSchroederPath(String),
    #[error("{0} is not a T-path")]
    NotATPath(String),
    #[error("H step at position {position} has no match")]
    UnmatchedH { position: usize },
    #[error("malformed input: {0}")]
    Parse(String),
}

impl Error {
    /// Stable machine-readable name of the variant.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::UnknownLetter { .. } => "UnknownLetter",
            Error::UnbalancedWord { .. } => "UnbalancedWord",
            Error::EmptyPath => "EmptyPath",
            Error::InvalidBound(_) => "InvalidBound",
            Error::NotAFibonacciPath(_) => "NotAFibonacciPath",
            Error::CountOnlySystem(_) => "CountOnlySystem",
            Error::InvalidColouring(_) => "InvalidColouring",
            Error::WrongColourSystem { .. } => "WrongColourSystem",
            Error::SizeTooLarge { .. } => "SizeTooLarge",
            Error::NotAnNCTree(_) => "NotAnNCTree",
            Error::NotAnNCOTree(_) => "NotAnNCOTree",
            Error::InvalidPartition(_) => "InvalidPartition",
            Error::InvalidDissection(_) => "InvalidDissection",
            Error::NotALittleSchroederPath(_) => "NotALittleSchroederPath",
            Error::NotATPath(_) => "NotATPath",
            Error::UnmatchedH { .. } => "UnmatchedH",
            Error::Parse(_) => "Parse",
        }
    }
}
