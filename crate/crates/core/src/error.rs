use thiserror::Error;

use crate::mol::ParseError;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error(transparent)]
    Parse(#[from] ParseError),

    #[error("training set is empty")]
    EmptyTrainingSet,

    #[error("labels are not binary: value {value} at position {index}")]
    NonBinaryLabel { index: usize, value: f64 },

    #[error("expected {expected} labels, got {actual}")]
    LabelCount { expected: usize, actual: usize },

    #[error("at least {required} values are required, got {actual}")]
    TooFewValues { required: usize, actual: usize },

    #[error("column lengths differ: {0} vs {1}")]
    LengthMismatch(usize, usize),

    #[error("k = {k} exceeds the training set size {n}")]
    NeighborCount { k: usize, n: usize },

    #[error("{metric} needs both classes present in the truth vector")]
    SingleClass { metric: &'static str },

    #[error("scaffold split needs at least 2 distinct scaffolds, found {0}")]
    TooFewScaffolds(usize),

    #[error("invalid configuration: {0}")]
    Config(String),

    #[error("invalid fingerprint cache: {0}")]
    Cache(String),

    #[error("dataset `{path}`: {message}")]
    Dataset { path: String, message: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),
}
