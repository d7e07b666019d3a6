use thiserror::Error;

use crate::profile::GammaViolation;

/// Errors produced by parsing, validation and the tally pipeline.
#[derive(Debug, Error)]
pub enum Error {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("unknown candidate \"{0}\"")]
    UnknownCandidate(String),

    #[error("line {line}: duplicate candidate \"{name}\" in one ballot")]
    DuplicateCandidate { line: usize, name: String },

    #[error("line {line}: negative weight")]
    NegativeWeight { line: usize },

    #[error("line {line}: incomplete ballot (missing: {missing})")]
    IncompleteBallot { line: usize, missing: String },

    #[error("profile has zero total weight")]
    ZeroTotalWeight,

    #[error("score matrix is not complete: {0}")]
    NotComplete(GammaViolation),

    #[error("scores violate the min inequality on triple ({x}, {y}, {z}); \
             did you pass raw scores where indirect scores are required?")]
    MinInequality { x: String, y: String, z: String },

    #[error("relation is not a partial order: {0}")]
    NotPartialOrder(String),

    #[error("ranks do not order the relation: pair ({x}, {y}) is reversed")]
    NotAnExtension { x: String, y: String },

    #[error("order is not admissible: margin of ({x}, {y}) is negative")]
    NotAdmissible { x: String, y: String },

    #[error("candidate count {n} exceeds the enumeration bound {bound}")]
    BoundExceeded { n: usize, bound: usize },

    #[error("sets do not partition the candidates")]
    InvalidPartition,

    #[error("set {{{0}}} is not autonomous")]
    NotAutonomous(String),

    #[error("perturbed matrix does not dominate the original on row {0}")]
    InvalidLift(String),
}

pub type Result<T> = std::result::Result<T, Error>;
