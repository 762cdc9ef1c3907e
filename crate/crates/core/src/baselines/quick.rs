use crate::element::{ElementSeq, SortValue};
use crate::metering::CostLedger;

/// In-place quicksort with a median-of-three pivot and Hoare partitioning.
///
/// Not stable. Equal keys stop both partition scans, so runs of duplicates
/// split evenly instead of degrading to quadratic time. Recursion descends
/// into the smaller side only.
pub fn quicksort_slice<T: SortValue>(items: &[T], ledger: &mut CostLedger) -> Vec<T> {
    let mut a = items.to_vec();
    if a.len() >= 2 {
        let hi = a.len() - 1;
        sort_range(&mut a, 0, hi, ledger);
    }
    a
}

pub fn quicksort(seq: &ElementSeq, ledger: &mut CostLedger) -> ElementSeq {
    ElementSeq::from_permutation(quicksort_slice(seq.as_slice(), ledger), seq.range())
}

#[inline]
fn swap<T: Copy>(a: &mut [T], i: usize, j: usize, ledger: &mut CostLedger) {
    a.swap(i, j);
    ledger.access(4);
}

/// Orders `a[i] <= a[j]` with one comparison (two reads).
#[inline]
fn order<T: SortValue>(a: &mut [T], i: usize, j: usize, ledger: &mut CostLedger) {
    ledger.access(2);
    ledger.compare(1);
    if a[j].value() < a[i].value() {
        swap(a, i, j, ledger);
    }
}

fn sort_range<T: SortValue>(a: &mut [T], mut lo: usize, mut hi: usize, ledger: &mut CostLedger) {
    while lo < hi {
        if hi - lo == 1 {
            order(a, lo, hi, ledger);
            return;
        }
        let mid = lo + (hi - lo) / 2;
        order(a, lo, mid, ledger);
        order(a, mid, hi, ledger);
        order(a, lo, mid, ledger);
        if hi - lo < 3 {
            // two or three elements are fully ordered by the median step
            return;
        }
        ledger.access(1);
        let pivot = a[mid].value();

        let split = partition(a, lo, hi, pivot, ledger);
        if split - lo < hi - split {
            sort_range(a, lo, split, ledger);
            lo = split + 1;
        } else {
            sort_range(a, split + 1, hi, ledger);
            hi = split;
        }
    }
}

/// Hoare partition of `a[lo..=hi]` around `pivot`; returns `j` with
/// `a[lo..=j] <= pivot <= a[j+1..=hi]`.
fn partition<T: SortValue>(
    a: &mut [T],
    lo: usize,
    hi: usize,
    pivot: i64,
    ledger: &mut CostLedger,
) -> usize {
    let mut i = lo;
    let mut j = hi;
    let mut first = true;
    loop {
        if !first {
            i += 1;
            j -= 1;
        }
        first = false;
        loop {
            ledger.access(1);
            ledger.compare(1);
            if a[i].value() >= pivot {
                break;
            }
            i += 1;
        }
        loop {
            ledger.access(1);
            ledger.compare(1);
            if a[j].value() <= pivot {
                break;
            }
            j -= 1;
        }
        if i >= j {
            return j;
        }
        swap(a, i, j, ledger);
    }
}
