use thiserror::Error;

use crate::rainbow::Failure;

#[derive(Debug, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("{what} = {value} out of range ({range})")]
    OutOfRange {
        what: &'static str,
        value: String,
        range: String,
    },

    #[error("duplicate point: ids {first} and {second} have identical coordinates")]
    DuplicatePoint { first: usize, second: usize },

    #[error("empty input")]
    Empty,

    #[error("need at least {needed} points, have {n}")]
    TooFewPoints { n: usize, needed: usize },

    #[error("invalid subset: {0}")]
    InvalidSubset(String),

    #[error("point set is not in general position for a = {a}: ids {witness:?} are degenerate")]
    NotGeneralPosition { a: usize, witness: Vec<usize> },

    #[error("size guard exceeded: {0}")]
    Guard(String),

    #[error("rainbow extraction failed after {} samples", .0.samples_tried)]
    Extraction(Box<Failure>),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub(crate) fn out_of_range(what: &'static str, value: impl ToString, range: impl ToString) -> Error {
    Error::OutOfRange {
        what,
        value: value.to_string(),
        range: range.to_string(),
    }
}
