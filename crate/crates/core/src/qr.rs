//! QR Sort: a stable remainder-key counting pass followed by a stable
//! quotient-key counting pass, with the quotient pass skipped when every
//! quotient is zero.

use std::fmt;
use std::str::FromStr;

use crate::counting::{counting_key_sort, zeroed_bins, KeySeq};
use crate::divisor::{select_divisor, DivisorStrategy};
use crate::element::{ElementSeq, SortValue, ValueRange};
use crate::error::{Result, SortError};
use crate::metering::{CostLedger, OpCategory};

/// How remainder and quotient keys are derived from element values.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum QrKeyMode {
    /// `(v - min) mod d` and `(v - min) / d`.
    #[default]
    General,
    /// `v mod d` and `v / d`; requires a non-negative minimum.
    SubtractionFree,
    /// `(v - min) & (d - 1)` and `(v - min) >> log2(d)`; requires `d = 2^c`.
    Bitwise,
}

impl fmt::Display for QrKeyMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            QrKeyMode::General => "general",
            QrKeyMode::SubtractionFree => "subtraction-free",
            QrKeyMode::Bitwise => "bitwise",
        })
    }
}

impl FromStr for QrKeyMode {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "general" => Ok(QrKeyMode::General),
            "subtraction-free" => Ok(QrKeyMode::SubtractionFree),
            "bitwise" => Ok(QrKeyMode::Bitwise),
            other => Err(format!(
                "unknown key mode `{other}` (expected general, subtraction-free, or bitwise)"
            )),
        }
    }
}

/// Checks the divisor against the mode and returns the shift for bitwise keys.
fn check_divisor(divisor: u64, mode: QrKeyMode) -> Result<u32> {
    if divisor == 0 {
        return Err(SortError::InvalidDivisor);
    }
    if mode == QrKeyMode::Bitwise && !divisor.is_power_of_two() {
        return Err(SortError::ModeMismatch { divisor });
    }
    Ok(divisor.trailing_zeros())
}

/// Divisor, mode, and origin resolved against one input's value range.
#[derive(Debug, Clone, Copy)]
struct KeyPlan {
    mode: QrKeyMode,
    divisor: u64,
    shift: u32,
    origin: i64,
    top: u64,
}

impl KeyPlan {
    fn new(range: &ValueRange, divisor: u64, mode: QrKeyMode) -> Result<Self> {
        let shift = check_divisor(divisor, mode)?;
        let origin = match mode {
            QrKeyMode::SubtractionFree => {
                if range.min() < 0 {
                    return Err(SortError::NegativeInput { min: range.min() });
                }
                0
            }
            _ => range.min(),
        };
        let top = range.max().abs_diff(origin);
        Ok(Self {
            mode,
            divisor,
            shift,
            origin,
            top,
        })
    }

    #[inline]
    fn offset(&self, v: i64) -> u64 {
        v.abs_diff(self.origin)
    }

    #[inline]
    fn remainder(&self, v: i64) -> usize {
        let x = self.offset(v);
        (match self.mode {
            QrKeyMode::Bitwise => x & (self.divisor - 1),
            _ => x % self.divisor,
        }) as usize
    }

    #[inline]
    fn quotient_of_offset(&self, x: u64) -> u64 {
        match self.mode {
            QrKeyMode::Bitwise => x >> self.shift,
            _ => x / self.divisor,
        }
    }

    #[inline]
    fn quotient(&self, v: i64) -> usize {
        self.quotient_of_offset(self.offset(v)) as usize
    }

    /// Largest quotient key; one division (or shift).
    fn max_quotient(&self, ledger: &mut CostLedger) -> u64 {
        self.record_quotient_ops(1, ledger);
        self.quotient_of_offset(self.top)
    }

    fn record_quotient_ops(&self, count: u64, ledger: &mut CostLedger) {
        let cat = match self.mode {
            QrKeyMode::Bitwise => OpCategory::Bitwise,
            _ => OpCategory::Division,
        };
        ledger.record(cat, count);
    }

    fn record_remainder_ops(&self, count: u64, ledger: &mut CostLedger) {
        let cat = match self.mode {
            QrKeyMode::Bitwise => OpCategory::Bitwise,
            _ => OpCategory::Modulo,
        };
        ledger.record(cat, count);
    }

    /// One read, one key operation and one key write per element.
    fn remainder_keys<T: SortValue>(&self, items: &[T], ledger: &mut CostLedger) -> KeySeq {
        let keys = items.iter().map(|it| self.remainder(it.value())).collect();
        let n = items.len() as u64;
        ledger.record(OpCategory::Access, 2 * n);
        self.record_remainder_ops(n, ledger);
        KeySeq::from_parts_unchecked(keys, self.divisor as usize)
    }

    fn quotient_keys<T: SortValue>(
        &self,
        items: &[T],
        max_quot: u64,
        ledger: &mut CostLedger,
    ) -> KeySeq {
        let keys = items.iter().map(|it| self.quotient(it.value())).collect();
        let n = items.len() as u64;
        ledger.record(OpCategory::Access, 2 * n);
        self.record_quotient_ops(n, ledger);
        KeySeq::from_parts_unchecked(keys, max_quot as usize + 1)
    }
}

/// Remainder keys for `items` (whose values lie in `range`), bounded by `divisor`.
pub fn compute_remainder_keys<T: SortValue>(
    items: &[T],
    range: &ValueRange,
    divisor: u64,
    mode: QrKeyMode,
    ledger: &mut CostLedger,
) -> Result<KeySeq> {
    let plan = KeyPlan::new(range, divisor, mode)?;
    Ok(plan.remainder_keys(items, ledger))
}

/// Quotient keys for `items`, bounded by the largest quotient plus one.
///
/// The bound computation is not metered here; inside [`qr_sort`] it is the
/// single `max_quot` division.
pub fn compute_quotient_keys<T: SortValue>(
    items: &[T],
    range: &ValueRange,
    divisor: u64,
    mode: QrKeyMode,
    ledger: &mut CostLedger,
) -> Result<KeySeq> {
    let plan = KeyPlan::new(range, divisor, mode)?;
    let max_quot = plan.quotient_of_offset(plan.top);
    Ok(plan.quotient_keys(items, max_quot, ledger))
}

/// QR Sort over any [`SortValue`] slice, returning a sorted copy.
///
/// Inputs shorter than two elements are returned as-is without touching the
/// ledger.
pub fn qr_sort_slice<T: SortValue>(
    items: &[T],
    divisor: u64,
    mode: QrKeyMode,
    ledger: &mut CostLedger,
) -> Result<Vec<T>> {
    check_divisor(divisor, mode)?;
    if items.len() < 2 {
        if let (QrKeyMode::SubtractionFree, Some(it)) = (mode, items.first()) {
            if it.value() < 0 {
                return Err(SortError::NegativeInput { min: it.value() });
            }
        }
        return Ok(items.to_vec());
    }

    let range = ValueRange::scan(items, ledger)?.expect("non-empty");
    let plan = KeyPlan::new(&range, divisor, mode)?;
    let max_quot = plan.max_quotient(ledger);

    let mut a = items.to_vec();
    let mut b = items.to_vec();

    let remainders = plan.remainder_keys(&a, ledger);
    let mut rem_bins = zeroed_bins(divisor)?;

    if max_quot == 0 {
        counting_key_sort(&mut a, &mut b, &mut rem_bins, &remainders, true, ledger)?;
        return Ok(a);
    }

    // A -> B by remainder, leaving A intact so the quotient pass can write
    // straight back into it.
    counting_key_sort(&mut a, &mut b, &mut rem_bins, &remainders, false, ledger)?;
    drop(rem_bins);

    let quotients = plan.quotient_keys(&b, max_quot, ledger);
    let mut quot_bins = zeroed_bins(max_quot + 1)?;
    counting_key_sort(&mut b, &mut a, &mut quot_bins, &quotients, false, ledger)?;
    Ok(a)
}

/// Sorts `seq` with QR Sort using divisor `divisor`.
pub fn qr_sort(
    seq: &ElementSeq,
    divisor: u64,
    mode: QrKeyMode,
    ledger: &mut CostLedger,
) -> Result<ElementSeq> {
    let sorted = qr_sort_slice(seq.as_slice(), divisor, mode, ledger)?;
    Ok(ElementSeq::from_permutation(sorted, seq.range()))
}

/// Divisor that `strategy` picks for `items`; `None` when `items` is empty.
pub fn divisor_for<T: SortValue>(items: &[T], strategy: DivisorStrategy) -> Result<Option<u64>> {
    match ValueRange::of(items)? {
        Some(range) => select_divisor(range.m(), strategy).map(Some),
        None => Ok(None),
    }
}

/// QR Sort with the divisor and key mode chosen by `strategy`.
pub fn qr_sort_auto_slice<T: SortValue>(
    items: &[T],
    strategy: DivisorStrategy,
    ledger: &mut CostLedger,
) -> Result<Vec<T>> {
    match divisor_for(items, strategy)? {
        Some(d) => qr_sort_slice(items, d, strategy.key_mode(), ledger),
        None => Ok(Vec::new()),
    }
}

pub fn qr_sort_auto(
    seq: &ElementSeq,
    strategy: DivisorStrategy,
    ledger: &mut CostLedger,
) -> Result<ElementSeq> {
    let sorted = qr_sort_auto_slice(seq.as_slice(), strategy, ledger)?;
    Ok(ElementSeq::from_permutation(sorted, seq.range()))
}
