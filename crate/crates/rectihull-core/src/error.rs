//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// An operation that needs at least one sample point received none.
    #[error("empty sample: at least one point is required")]
    EmptySample,

    /// A set-distance was requested between sets one of which is empty
    /// (no points, or no grid cell satisfies the membership predicate).
    #[error("empty set: distance is undefined")]
    EmptySet,

    /// Rejection sampling made too many draws without enough acceptances.
    #[error("rejection sampling stalled: {accepted} accepted out of {draws} draws")]
    RejectionStall { draws: u64, accepted: u64 },

    /// A polygon failed validation on construction.
    #[error("invalid polygon: {0}")]
    InvalidPolygon(String),

    /// A region tree failed validation.
    #[error("invalid region: {0}")]
    InvalidRegion(String),

    /// A text input (CSV or JSON) could not be parsed.
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

pub type Result<T> = std::result::Result<T, Error>;
