use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("rank {rank} is out of range for type {family}")]
    InvalidRank { family: char, rank: usize },

    #[error("cannot parse Cartan type {0:?} (expected e.g. \"A2\" or \"C2~\")")]
    UnknownType(String),

    #[error("{what} exceeds the configured cap of {cap}")]
    ResourceCap { what: &'static str, cap: usize },

    #[error("weight {0} is not dominant")]
    NotDominant(String),

    #[error("word {0:?} is not reduced")]
    NotReduced(Vec<usize>),

    #[error("no unique {mode} anchor: {detail}")]
    AmbiguousAnchor { mode: &'static str, detail: String },

    #[error("unsupported factor B^{{{r},{s}}} in type {cartan}: {reason}")]
    UnsupportedFactor {
        cartan: String,
        r: usize,
        s: i64,
        reason: &'static str,
    },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("invalid input: {0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, Error>;
