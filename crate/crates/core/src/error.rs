use thiserror::Error;

/// Errors raised by every fallible operation in the crate.
///
/// Indices in messages are 1-based, matching the sequence notation `a_1, ..., a_n`.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("sequence too short: need at least {min} terms, got {got}")]
    Length { min: usize, got: usize },

    #[error("length mismatch: {left} ≠ {right}")]
    LengthMismatch { left: usize, right: usize },

    #[error("non-finite value at index {index}")]
    NonFinite { index: usize },

    #[error("witness is not strictly increasing at index {index}")]
    WitnessNotIncreasing { index: usize },

    #[error("sequence is not strictly V-shaped")]
    NotStrictlyVShaped,

    #[error("slope schedule entry {index} has the wrong sign for its step")]
    Sign { index: usize },

    #[error("slope schedule is not strictly increasing at index {index}")]
    NotMonotone { index: usize },

    #[error("slope schedule has {got} entries, the sequence has {expected} non-plateau steps")]
    ScheduleLength { expected: usize, got: usize },

    #[error("invalid interval: alpha = {alpha} must be < beta = {beta}")]
    Interval { alpha: f64, beta: f64 },

    #[error("{x} lies outside the domain [{lo}, {hi}]")]
    OutOfDomain { x: f64, lo: f64, hi: f64 },

    #[error("negative weight at index {index}")]
    NegativeWeight { index: usize },

    #[error("total weight must be positive")]
    ZeroTotalWeight,

    #[error("degenerate witness: centered second moment {value} is not positive")]
    DegenerateWitness { value: f64 },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("sequence is not strictly increasing at index {index}")]
    NotStrictlyIncreasing { index: usize },

    #[error("index {index} out of range 1..={len}")]
    IndexOutOfRange { index: usize, len: usize },

    #[error("cannot generate shape {shape} with {n} terms")]
    InfeasibleShape { shape: String, n: usize },

    #[error("not applicable: {0}")]
    NotApplicable(String),

    #[error("invalid tolerance: abs = {abs}, rel = {rel}")]
    InvalidTolerance { abs: f64, rel: f64 },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
