//! Inputs shared by the wall-clock benchmarks.

use qrsort_core::rng::trial_rng;
use qrsort_core::{fisher_yates_shuffle, generate_array};

/// `n` evenly spaced values over `[0, max_value]`, shuffled with a fixed
/// seed so every run times the same input.
pub fn shuffled_input(n: usize, max_value: i64) -> Vec<i64> {
    let mut items = generate_array(n, 0, max_value)
        .expect("valid bench input")
        .into_vec();
    fisher_yates_shuffle(&mut items, &mut trial_rng(0x5eed, n, 0));
    items
}
