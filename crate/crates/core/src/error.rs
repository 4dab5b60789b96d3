use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("degree must be at least 1")]
    ZeroDegree,

    #[error("not a permutation of 1..{degree}: {reason}")]
    InvalidPermutation { degree: usize, reason: String },

    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("partitions of different integers: {left} vs {right}")]
    SizeMismatch { left: usize, right: usize },

    #[error("{n_keywords} keywords exceed a vocabulary of {vocab_size} terms")]
    TooManyKeywords { n_keywords: usize, vocab_size: usize },

    #[error("invalid configuration: {0}")]
    InvalidConfiguration(String),

    #[error("invalid tableau: {0}")]
    InvalidTableau(String),

    #[error("shape mismatch: {left} vs {right}")]
    ShapeMismatch { left: String, right: String },

    #[error("enumeration of {requested} objects exceeds the cap of {cap}")]
    CapExceeded { requested: u128, cap: u128 },

    #[error("arithmetic overflow computing {0}")]
    Overflow(String),

    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },

    #[error("line {line}: duplicate table `{name}`")]
    DuplicateTable { line: usize, name: String },

    #[error("line {line}: duplicate attribute `{attribute}` in table `{table}`")]
    DuplicateAttribute {
        line: usize,
        table: String,
        attribute: String,
    },

    #[error("invalid score matrix: {0}")]
    InvalidScores(String),

    #[error("results mix configuration spaces ({0})")]
    MixedSpaces(String),

    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    /// Cap and overflow failures are resource limits rather than bad input.
    pub fn is_resource_limit(&self) -> bool {
        matches!(self, Error::CapExceeded { .. } | Error::Overflow(_))
    }
}
