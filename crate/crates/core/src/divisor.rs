//! Divisor selection for QR Sort.

use std::fmt;
use std::num::NonZeroU64;
use std::str::FromStr;

use crate::error::{Result, SortError};
use crate::qr::QrKeyMode;

/// Rule that turns a range-plus-one `m` into a divisor.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum DivisorStrategy {
    /// `floor(sqrt(m))`, balancing remainder and quotient bins.
    #[default]
    SqrtRange,
    /// `m + 1`: every quotient is zero, so only the remainder pass runs.
    BypassQuotient,
    /// The power of two nearest `sqrt(m)`, enabling mask/shift keys.
    PowerOfTwo,
    Fixed(NonZeroU64),
}

impl DivisorStrategy {
    /// Key mode implied by the strategy: bitwise for powers of two, general
    /// arithmetic otherwise.
    pub fn key_mode(&self) -> QrKeyMode {
        match self {
            DivisorStrategy::PowerOfTwo => QrKeyMode::Bitwise,
            _ => QrKeyMode::General,
        }
    }
}

impl fmt::Display for DivisorStrategy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DivisorStrategy::SqrtRange => f.write_str("sqrt"),
            DivisorStrategy::BypassQuotient => f.write_str("bypass"),
            DivisorStrategy::PowerOfTwo => f.write_str("pow2"),
            DivisorStrategy::Fixed(d) => write!(f, "fixed:{d}"),
        }
    }
}

impl FromStr for DivisorStrategy {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "sqrt" => Ok(DivisorStrategy::SqrtRange),
            "bypass" => Ok(DivisorStrategy::BypassQuotient),
            "pow2" => Ok(DivisorStrategy::PowerOfTwo),
            other => {
                let raw = other.strip_prefix("fixed:").unwrap_or(other);
                raw.parse::<u64>()
                    .ok()
                    .and_then(NonZeroU64::new)
                    .map(DivisorStrategy::Fixed)
                    .ok_or_else(|| {
                        format!("unknown divisor strategy `{other}` (expected sqrt, bypass, pow2, or fixed:<d>)")
                    })
            }
        }
    }
}

/// Picks the divisor for range-plus-one `m`.
pub fn select_divisor(m: u64, strategy: DivisorStrategy) -> Result<u64> {
    if m < 1 {
        return Err(SortError::InvalidRange);
    }
    let d = match strategy {
        DivisorStrategy::SqrtRange => m.isqrt().max(1),
        DivisorStrategy::BypassQuotient => m.checked_add(1).ok_or(SortError::InvalidRange)?,
        DivisorStrategy::PowerOfTwo => {
            let c = (0.5 * (m as f64).log2()).round() as u32;
            1u64 << c
        }
        DivisorStrategy::Fixed(d) => d.get(),
    };
    Ok(d)
}

/// Counting bins allocated by both QR passes for range `m` and divisor `d`:
/// `d` remainder bins plus `floor((m - 1) / d) + 1` quotient bins.
pub fn pass_cost(m: u64, d: u64) -> u64 {
    debug_assert!(m >= 1 && d >= 1);
    d + (m - 1) / d + 1
}
