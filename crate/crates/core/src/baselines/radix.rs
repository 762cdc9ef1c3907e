use crate::counting::{counting_key_sort, zeroed_bins, KeySeq};
use crate::element::{ElementSeq, SortValue, ValueRange};
use crate::error::{Result, SortError};
use crate::metering::{CostLedger, OpCategory};

/// Number of LSD passes needed for normalized values up to `span` in base
/// `base`: `floor(log_base(span)) + 1`, and 1 when `span < base`.
pub fn radix_pass_count(span: u64, base: u64) -> u32 {
    debug_assert!(base >= 2);
    let mut passes = 1;
    let mut rest = span;
    while rest >= base {
        rest /= base;
        passes += 1;
    }
    passes
}

/// LSD radix sort over `value - min` in base `base`.
///
/// Each pass extracts the digit `floor(v / base^p) mod base` with one
/// division and one modulo per element, then runs a stable counting pass
/// with `base` bins. Passes ping-pong between two buffers without copying
/// back. Deriving the pass count costs one comparison per loop test and one
/// division per extra pass.
pub fn radix_sort_lsd_slice<T: SortValue>(
    items: &[T],
    base: u64,
    ledger: &mut CostLedger,
) -> Result<Vec<T>> {
    if base < 2 {
        return Err(SortError::InvalidBase(base));
    }
    if items.len() < 2 {
        return Ok(items.to_vec());
    }
    let range = ValueRange::scan(items, ledger)?.expect("non-empty");
    let passes = radix_pass_count(range.span(), base);
    ledger.record(OpCategory::Compare, passes as u64);
    ledger.record(OpCategory::Division, passes as u64 - 1);

    let n = items.len() as u64;
    let mut src = items.to_vec();
    let mut dst = items.to_vec();
    let mut place = 1u64;
    for p in 0..passes {
        if p > 0 {
            // place <= span here, so this cannot overflow
            place *= base;
        }
        let keys: Vec<usize> = src
            .iter()
            .map(|it| ((range.offset(it.value()) / place) % base) as usize)
            .collect();
        ledger.record(OpCategory::Access, 2 * n);
        ledger.record(OpCategory::Division, n);
        ledger.record(OpCategory::Modulo, n);
        let keys = KeySeq::from_parts_unchecked(keys, base as usize);

        let mut bins = zeroed_bins(base)?;
        counting_key_sort(&mut src, &mut dst, &mut bins, &keys, false, ledger)?;
        std::mem::swap(&mut src, &mut dst);
    }
    Ok(src)
}

pub fn radix_sort_lsd(seq: &ElementSeq, base: u64, ledger: &mut CostLedger) -> Result<ElementSeq> {
    let sorted = radix_sort_lsd_slice(seq.as_slice(), base, ledger)?;
    Ok(ElementSeq::from_permutation(sorted, seq.range()))
}
