//! Stable counting sort over caller-supplied integer keys.

use crate::error::{Result, SortError};
use crate::metering::CostLedger;

/// Per-element sort keys with an exclusive upper bound.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KeySeq {
    keys: Vec<usize>,
    key_bound: usize,
}

impl KeySeq {
    pub fn new(keys: Vec<usize>, key_bound: usize) -> Result<Self> {
        if let Some((index, &key)) = keys.iter().enumerate().find(|(_, &k)| k >= key_bound) {
            return Err(SortError::KeyOutOfRange {
                index,
                key,
                key_bound,
            });
        }
        Ok(Self { keys, key_bound })
    }

    pub(crate) fn from_parts_unchecked(keys: Vec<usize>, key_bound: usize) -> Self {
        debug_assert!(keys.iter().all(|&k| k < key_bound));
        Self { keys, key_bound }
    }

    pub fn keys(&self) -> &[usize] {
        &self.keys
    }

    pub fn key_bound(&self) -> usize {
        self.key_bound
    }

    pub fn len(&self) -> usize {
        self.keys.len()
    }

    pub fn is_empty(&self) -> bool {
        self.keys.is_empty()
    }
}

/// Zero-filled counting buffer of `bins` entries, failing instead of aborting
/// when the allocation cannot be satisfied.
pub fn zeroed_bins(bins: u64) -> Result<Vec<usize>> {
    let len = usize::try_from(bins).map_err(|_| SortError::BinAllocation { bins })?;
    let mut counts = Vec::new();
    counts
        .try_reserve_exact(len)
        .map_err(|_| SortError::BinAllocation { bins })?;
    counts.resize(len, 0);
    Ok(counts)
}

/// Stably places `source` into `dest` ordered by `keys`.
///
/// `counts` must be zeroed and hold exactly `keys.key_bound()` bins; its
/// contents are consumed. With `copy_back` the sorted result is also written
/// back into `source`.
///
/// Metering per element: three accesses to tally (key read, bin read, bin
/// write), five to place (key read, bin read, bin write, source read, dest
/// write) and two more for the optional copy-back. The prefix sum costs three
/// accesses per bin after the first.
pub fn counting_key_sort<T: Copy>(
    source: &mut [T],
    dest: &mut [T],
    counts: &mut [usize],
    keys: &KeySeq,
    copy_back: bool,
    ledger: &mut CostLedger,
) -> Result<()> {
    let n = source.len();
    for len in [dest.len(), keys.len()] {
        if len != n {
            return Err(SortError::LengthMismatch {
                expected: n,
                actual: len,
            });
        }
    }
    if counts.len() != keys.key_bound() {
        return Err(SortError::LengthMismatch {
            expected: keys.key_bound(),
            actual: counts.len(),
        });
    }
    debug_assert!(
        counts.iter().all(|&c| c == 0),
        "counting buffer must start zeroed"
    );

    ledger.counting_pass(counts.len());
    let keys = keys.keys();

    for &k in keys {
        counts[k] += 1;
    }
    ledger.access(3 * n as u64);

    let mut running = 0;
    for c in counts.iter_mut() {
        running += *c;
        *c = running;
    }
    ledger.access(3 * counts.len().saturating_sub(1) as u64);

    for i in (0..n).rev() {
        let k = keys[i];
        let pos = counts[k] - 1;
        counts[k] = pos;
        dest[pos] = source[i];
    }
    ledger.access(5 * n as u64);

    if copy_back {
        source.copy_from_slice(dest);
        ledger.access(2 * n as u64);
    }
    Ok(())
}

/// [`counting_key_sort`] with internally allocated output and bins.
pub fn counting_key_sort_alloc<T: Copy>(
    items: &[T],
    keys: &KeySeq,
    ledger: &mut CostLedger,
) -> Result<Vec<T>> {
    let mut source = items.to_vec();
    let mut dest = items.to_vec();
    let mut counts = zeroed_bins(keys.key_bound() as u64)?;
    counting_key_sort(&mut source, &mut dest, &mut counts, keys, false, ledger)?;
    Ok(dest)
}
