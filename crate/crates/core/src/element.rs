//! Element sequences and the value ranges every integer sort normalizes by.

use crate::error::{Result, SortError};
use crate::metering::CostLedger;

/// Something that sorts by a 64-bit signed value.
///
/// Implemented for `i64` itself and for [`Tagged`], which carries an extra
/// payload so tests can observe stability.
pub trait SortValue: Copy {
    fn value(&self) -> i64;
}

impl SortValue for i64 {
    #[inline]
    fn value(&self) -> i64 {
        *self
    }
}

/// A value paired with an opaque tag that plays no part in ordering.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Tagged {
    pub value: i64,
    pub tag: u32,
}

impl SortValue for Tagged {
    #[inline]
    fn value(&self) -> i64 {
        self.value
    }
}

/// Minimum and maximum of a non-empty sequence whose range-plus-one fits in
/// an `i64`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ValueRange {
    min: i64,
    max: i64,
}

impl ValueRange {
    pub fn new(min: i64, max: i64) -> Result<Self> {
        if min > max {
            return Err(SortError::RangeOverflow { min, max });
        }
        let m = max as i128 - min as i128 + 1;
        if m > i64::MAX as i128 {
            return Err(SortError::RangeOverflow { min, max });
        }
        Ok(Self { min, max })
    }

    /// Unmetered range of `items`; `None` when empty.
    pub fn of<T: SortValue>(items: &[T]) -> Result<Option<Self>> {
        let mut it = items.iter().map(SortValue::value);
        let Some(first) = it.next() else {
            return Ok(None);
        };
        let (min, max) = it.fold((first, first), |(lo, hi), v| (lo.min(v), hi.max(v)));
        Self::new(min, max).map(Some)
    }

    /// Metered scan: one access per element and two comparisons for every
    /// element after the first.
    pub fn scan<T: SortValue>(items: &[T], ledger: &mut CostLedger) -> Result<Option<Self>> {
        let Some(first) = items.first() else {
            return Ok(None);
        };
        let (mut min, mut max) = (first.value(), first.value());
        for item in &items[1..] {
            let v = item.value();
            if v < min {
                min = v;
            }
            if v > max {
                max = v;
            }
        }
        let n = items.len() as u64;
        ledger.access(n);
        ledger.compare(2 * (n - 1));
        Self::new(min, max).map(Some)
    }

    pub fn min(&self) -> i64 {
        self.min
    }

    pub fn max(&self) -> i64 {
        self.max
    }

    /// `max - min`.
    pub fn span(&self) -> u64 {
        self.max.abs_diff(self.min)
    }

    /// Range plus one: `max - min + 1`.
    pub fn m(&self) -> u64 {
        self.span() + 1
    }

    /// `value - min` for a value inside the range.
    #[inline]
    pub fn offset(&self, value: i64) -> u64 {
        debug_assert!(value >= self.min && value <= self.max);
        value.abs_diff(self.min)
    }
}

/// An owned sequence of `i64` values whose range-plus-one fits in an `i64`.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ElementSeq {
    items: Vec<i64>,
    range: Option<ValueRange>,
}

impl ElementSeq {
    pub fn new(items: Vec<i64>) -> Result<Self> {
        let range = ValueRange::of(&items)?;
        Ok(Self { items, range })
    }

    pub fn empty() -> Self {
        Self::default()
    }

    pub fn len(&self) -> usize {
        self.items.len()
    }

    pub fn is_empty(&self) -> bool {
        self.items.is_empty()
    }

    pub fn as_slice(&self) -> &[i64] {
        &self.items
    }

    pub fn into_vec(self) -> Vec<i64> {
        self.items
    }

    pub fn range(&self) -> Option<ValueRange> {
        self.range
    }

    /// Range plus one, or 0 for an empty sequence.
    pub fn m(&self) -> u64 {
        self.range.map_or(0, |r| r.m())
    }

    pub fn is_sorted(&self) -> bool {
        self.items.windows(2).all(|w| w[0] <= w[1])
    }

    /// Wraps a permutation of an already validated sequence.
    pub(crate) fn from_permutation(items: Vec<i64>, range: Option<ValueRange>) -> Self {
        Self { items, range }
    }
}

impl TryFrom<Vec<i64>> for ElementSeq {
    type Error = SortError;

    fn try_from(items: Vec<i64>) -> Result<Self> {
        Self::new(items)
    }
}

impl AsRef<[i64]> for ElementSeq {
    fn as_ref(&self) -> &[i64] {
        &self.items
    }
}
