use std::path::PathBuf;

use thiserror::Error;

use crate::extend::Violation;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("length mismatch: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },

    #[error("not a permutation of 0..{n}: {reason}")]
    NotBijective { n: usize, reason: String },

    #[error("n = {0} exceeds the supported maximum of 1024 symbols")]
    TooManySymbols(usize),

    #[error("duplicate row: rows {first} and {second} are equal")]
    DuplicateRow { first: usize, second: usize },

    #[error("empty permutation array")]
    EmptyArray,

    #[error("{0} is not a prime power")]
    NotPrimePower(usize),

    #[error("prime power {0} is outside the supported range 2..=1024")]
    FieldTooLarge(usize),

    #[error("zero has no multiplicative inverse")]
    ZeroInverse,

    #[error("not a group: {0}")]
    NotAGroup(String),

    #[error("wrong group family: expected {expected}, found {found}")]
    WrongFamily { expected: &'static str, found: String },

    #[error("block decomposition failed: {0}")]
    Decomposition(String),

    #[error("not a Latin square: {0}")]
    NotLatin(String),

    #[error("squares {0} and {1} are not orthogonal")]
    NotOrthogonal(usize, usize),

    #[error("invalid partition system: {0}")]
    InvalidSystem(Violation),

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("coverage shortfall: {covered} of {total} rows covered")]
    CoverageShortfall { covered: usize, total: usize },

    #[error("coset structure mismatch: {0}")]
    CosetStructure(String),

    #[error("invalid model: {0}")]
    Model(String),

    #[error("missing N({0}): no MOLS count entry available")]
    MissingMolsCount(u32),

    #[error("invalid bound record: {0}")]
    Record(String),

    #[error("{path}:{line}: {msg}")]
    Parse { path: String, line: usize, msg: String },

    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),
}

impl Error {
    pub(crate) fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        Error::Io { path: path.into(), source }
    }

    pub(crate) fn parse(path: impl AsRef<str>, line: usize, msg: impl Into<String>) -> Self {
        Error::Parse { path: path.as_ref().to_string(), line, msg: msg.into() }
    }
}
