//! Algorithm identifiers and a uniform entry point used by the harness.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::baselines::{
    counting_sort_value_slice, merge_sort_slice, quicksort_slice, radix_sort_lsd_slice,
};
use crate::divisor::DivisorStrategy;
use crate::error::Result;
use crate::metering::CostLedger;
use crate::qr::qr_sort_auto_slice;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum AlgorithmId {
    Merge,
    Quick,
    Counting,
    Radix,
    Qr,
}

impl AlgorithmId {
    pub const ALL: [AlgorithmId; 5] = [
        AlgorithmId::Merge,
        AlgorithmId::Quick,
        AlgorithmId::Counting,
        AlgorithmId::Radix,
        AlgorithmId::Qr,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            AlgorithmId::Merge => "merge",
            AlgorithmId::Quick => "quick",
            AlgorithmId::Counting => "counting",
            AlgorithmId::Radix => "radix",
            AlgorithmId::Qr => "qr",
        }
    }

    /// Whether equal values are guaranteed to keep their input order.
    pub fn is_stable(&self) -> bool {
        !matches!(self, AlgorithmId::Quick)
    }
}

impl fmt::Display for AlgorithmId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for AlgorithmId {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        AlgorithmId::ALL
            .into_iter()
            .find(|a| a.as_str() == s)
            .ok_or_else(|| {
                format!("unknown algorithm `{s}` (expected merge, quick, counting, radix, or qr)")
            })
    }
}

/// How the radix base is chosen for an input of length `n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum RadixBase {
    /// Base equal to the input length (at least 2).
    #[default]
    EqualsLength,
    Fixed(u64),
}

impl RadixBase {
    pub fn for_length(&self, n: usize) -> u64 {
        match *self {
            RadixBase::EqualsLength => (n as u64).max(2),
            RadixBase::Fixed(b) => b,
        }
    }
}

impl FromStr for RadixBase {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        if s == "n" {
            return Ok(RadixBase::EqualsLength);
        }
        match s.parse::<u64>() {
            Ok(b) if b >= 2 => Ok(RadixBase::Fixed(b)),
            _ => Err(format!(
                "radix base must be `n` or an integer >= 2, got `{s}`"
            )),
        }
    }
}

impl fmt::Display for RadixBase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RadixBase::EqualsLength => f.write_str("n"),
            RadixBase::Fixed(b) => write!(f, "{b}"),
        }
    }
}

/// Tunables shared by every algorithm run.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SortParams {
    pub strategy: DivisorStrategy,
    pub radix_base: RadixBase,
    pub bin_cap: u64,
}

impl Default for SortParams {
    fn default() -> Self {
        Self {
            strategy: DivisorStrategy::default(),
            radix_base: RadixBase::default(),
            bin_cap: crate::baselines::DEFAULT_BIN_CAP,
        }
    }
}

/// Sorts `items` with `algorithm`, metering into `ledger`.
pub fn run_algorithm(
    algorithm: AlgorithmId,
    items: &[i64],
    params: &SortParams,
    ledger: &mut CostLedger,
) -> Result<Vec<i64>> {
    match algorithm {
        AlgorithmId::Merge => Ok(merge_sort_slice(items, ledger)),
        AlgorithmId::Quick => Ok(quicksort_slice(items, ledger)),
        AlgorithmId::Counting => counting_sort_value_slice(items, ledger, params.bin_cap),
        AlgorithmId::Radix => {
            radix_sort_lsd_slice(items, params.radix_base.for_length(items.len()), ledger)
        }
        AlgorithmId::Qr => qr_sort_auto_slice(items, params.strategy, ledger),
    }
}
