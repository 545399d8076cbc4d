use thiserror::Error;

/// Errors raised by the exact arithmetic, numeration and balance routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("a continued fraction needs at least one partial quotient")]
    EmptyQuotients,

    #[error("partial quotient a_{index} must be a positive integer")]
    NonPositiveQuotient { index: usize },

    /// The stored quotient prefix cannot separate alpha from a rational.
    #[error("not decidable from {depth} partial quotients; supply more quotients")]
    InsufficientDepth { depth: usize },

    #[error("index {index} out of range (maximum {max})")]
    IndexOutOfRange { index: usize, max: usize },

    #[error("semi-convergent multiplier {a} outside [1, {max}]")]
    InvalidA { a: String, max: String },

    #[error("value {value} needs a denominator beyond q_K = {limit}")]
    ValueTooLargeForDepth { value: String, limit: String },

    #[error("invalid Ostrowski digit at index {index}: {reason}")]
    InvalidDigits { index: usize, reason: String },

    #[error("zero has no nonzero Ostrowski digit")]
    ZeroHasNoDigits,

    /// The interval length equals the difference of the points `i` and `j`.
    #[error("interval length equals the distance from point {j} to point {i}")]
    DistanceCollision { i: usize, j: usize },

    #[error("balance verdict for q_T - n changes between T and T + 1")]
    AmbiguousShift,

    #[error("integer overflow in the chosen scalar type")]
    Overflow,

    #[error("cannot parse `{token}`: {reason}")]
    Parse { token: String, reason: String },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
