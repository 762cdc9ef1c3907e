use thiserror::Error;

/// Failures raised by the sorting routines and their key builders.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SortError {
    #[error("value range overflows 64-bit arithmetic (min {min}, max {max})")]
    RangeOverflow { min: i64, max: i64 },
    #[error("divisor must be a positive integer")]
    InvalidDivisor,
    #[error("bitwise key mode needs a power-of-two divisor, got {divisor}")]
    ModeMismatch { divisor: u64 },
    #[error("subtraction-free key mode needs non-negative input, found minimum {min}")]
    NegativeInput { min: i64 },
    #[error("key {key} at index {index} is outside [0, {key_bound})")]
    KeyOutOfRange {
        index: usize,
        key: usize,
        key_bound: usize,
    },
    #[error("buffer length mismatch: expected {expected}, got {actual}")]
    LengthMismatch { expected: usize, actual: usize },
    #[error("range-plus-one must be at least 1")]
    InvalidRange,
    #[error("value range {m} exceeds the counting bin cap {bin_cap}")]
    RangeExceedsCapacity { m: u64, bin_cap: u64 },
    #[error("radix base must be at least 2, got {0}")]
    InvalidBase(u64),
    #[error("cannot allocate {bins} counting bins")]
    BinAllocation { bins: u64 },
}

pub type Result<T, E = SortError> = std::result::Result<T, E>;
