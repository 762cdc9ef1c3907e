//! Instrumented integer sorting: QR Sort with its key-mode and divisor
//! variants, four reference sorts metered under one cost model, and the
//! experiment harness and reports used to compare them.

pub mod algorithm;
pub mod baselines;
pub mod counting;
pub mod divisor;
pub mod element;
pub mod error;
pub mod harness;
pub mod metering;
pub mod qr;
pub mod report;
pub mod rng;

pub use algorithm::{run_algorithm, AlgorithmId, RadixBase, SortParams};
pub use baselines::{
    counting_sort_value, counting_sort_value_slice, merge_sort, merge_sort_slice, quicksort,
    quicksort_slice, radix_pass_count, radix_sort_lsd, radix_sort_lsd_slice, DEFAULT_BIN_CAP,
};
pub use counting::{counting_key_sort, counting_key_sort_alloc, zeroed_bins, KeySeq};
pub use divisor::{pass_cost, select_divisor, DivisorStrategy};
pub use element::{ElementSeq, SortValue, Tagged, ValueRange};
pub use error::SortError;
pub use harness::{
    generate_array, run_sweep, run_sweep_with_jobs, run_trial, ExperimentConfig, HarnessError,
    ResultRecord, SkipRecord, TrialOutcome,
};
pub use metering::{CostLedger, CostWeights, OpCategory};
pub use qr::{
    compute_quotient_keys, compute_remainder_keys, divisor_for, qr_sort, qr_sort_auto,
    qr_sort_auto_slice, qr_sort_slice, QrKeyMode,
};
pub use rng::fisher_yates_shuffle;
