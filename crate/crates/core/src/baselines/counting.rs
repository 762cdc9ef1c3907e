use crate::counting::{counting_key_sort, zeroed_bins, KeySeq};
use crate::element::{ElementSeq, SortValue, ValueRange};
use crate::error::{Result, SortError};
use crate::metering::CostLedger;

/// Default cap on the number of counting bins value counting sort may use.
pub const DEFAULT_BIN_CAP: u64 = 1 << 28;

/// Counting sort keyed directly by `value - min`, using `m` bins.
///
/// Fails with [`SortError::RangeExceedsCapacity`] when `m > bin_cap`.
pub fn counting_sort_value_slice<T: SortValue>(
    items: &[T],
    ledger: &mut CostLedger,
    bin_cap: u64,
) -> Result<Vec<T>> {
    if items.len() < 2 {
        return Ok(items.to_vec());
    }
    // Check the cap before metering anything so a refused sort costs nothing.
    let m = ValueRange::of(items)?.expect("non-empty").m();
    if m > bin_cap {
        return Err(SortError::RangeExceedsCapacity { m, bin_cap });
    }
    let range = ValueRange::scan(items, ledger)?.expect("non-empty");

    let keys: Vec<usize> = items
        .iter()
        .map(|it| range.offset(it.value()) as usize)
        .collect();
    ledger.access(2 * items.len() as u64);
    let keys = KeySeq::from_parts_unchecked(keys, m as usize);

    let mut source = items.to_vec();
    let mut dest = items.to_vec();
    let mut bins = zeroed_bins(m)?;
    counting_key_sort(&mut source, &mut dest, &mut bins, &keys, false, ledger)?;
    Ok(dest)
}

pub fn counting_sort_value(
    seq: &ElementSeq,
    ledger: &mut CostLedger,
    bin_cap: u64,
) -> Result<ElementSeq> {
    let sorted = counting_sort_value_slice(seq.as_slice(), ledger, bin_cap)?;
    Ok(ElementSeq::from_permutation(sorted, seq.range()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn eight_values_over_range_seven() {
        let v = [2i64, 5, 3, 0, 2, 3, 0, 7];
        let mut l = CostLedger::new();
        let out = counting_sort_value_slice(&v, &mut l, DEFAULT_BIN_CAP).unwrap();
        assert_eq!(out, vec![0, 0, 2, 2, 3, 3, 5, 7]);
        assert_eq!(l.bins_allocated, 8);
        assert_eq!(l.counting_passes, 1);
    }

    #[test]
    fn constant_input_uses_one_bin() {
        let mut l = CostLedger::new();
        let out = counting_sort_value_slice(&[5i64, 5, 5], &mut l, DEFAULT_BIN_CAP).unwrap();
        assert_eq!(out, vec![5, 5, 5]);
        assert_eq!(l.bins_allocated, 1);
    }

    #[test]
    fn range_over_cap_is_refused() {
        let mut l = CostLedger::new();
        let err = counting_sort_value_slice(&[0i64, 1000], &mut l, 1000);
        assert_eq!(
            err,
            Err(SortError::RangeExceedsCapacity {
                m: 1001,
                bin_cap: 1000
            })
        );
        assert_eq!(l, CostLedger::new());
    }
}
