//! Reference sorts metered under the same cost contract as QR Sort.

mod counting;
mod merge;
mod quick;
mod radix;

pub use counting::{counting_sort_value, counting_sort_value_slice, DEFAULT_BIN_CAP};
pub use merge::{merge_sort, merge_sort_slice};
pub use quick::{quicksort, quicksort_slice};
pub use radix::{radix_pass_count, radix_sort_lsd, radix_sort_lsd_slice};
