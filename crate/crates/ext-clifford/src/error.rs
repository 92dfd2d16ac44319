//! Library-wide error type.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A size cap was exceeded. `required` is the size the request would
    /// need, `cap` the configured bound.
    #[error("{what}: size {required} exceeds cap {cap}")]
    TooLarge {
        what: &'static str,
        required: u64,
        cap: u64,
    },

    /// A `ClassLabel` violates its type invariants (e.g. type II with N = 0).
    #[error("invalid class label: {0}")]
    InvalidLabel(String),

    /// An `InvariantProfile` does not match any of the five types.
    #[error("inconsistent invariant profile: {0}")]
    InconsistentProfile(String),

    /// The operation requires a two-block generator system built from an
    /// `ExtSignature`, but the given system has a different commutation
    /// pattern.
    #[error("generator system is not in two-block extended form")]
    UnsupportedSystem,

    /// An input collection that must be nonempty was empty.
    #[error("empty input: {0}")]
    EmptyInput(&'static str),

    /// Structurally invalid input data (non-square matrix, asymmetric
    /// commutation pattern, ...).
    #[error("malformed input: {0}")]
    Malformed(&'static str),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
