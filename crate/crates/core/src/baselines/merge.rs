use crate::element::{ElementSeq, SortValue};
use crate::metering::CostLedger;

/// Top-down merge sort with one auxiliary buffer.
///
/// Each merge writes the two runs into the auxiliary buffer and copies the
/// merged run back. Per merged element: one comparison while both runs are
/// live (two reads, one write), two accesses otherwise, plus two for the
/// copy-back.
pub fn merge_sort_slice<T: SortValue>(items: &[T], ledger: &mut CostLedger) -> Vec<T> {
    let mut a = items.to_vec();
    if a.len() < 2 {
        return a;
    }
    let mut aux = a.clone();
    sort_range(&mut a, &mut aux, 0, items.len(), ledger);
    a
}

pub fn merge_sort(seq: &ElementSeq, ledger: &mut CostLedger) -> ElementSeq {
    ElementSeq::from_permutation(merge_sort_slice(seq.as_slice(), ledger), seq.range())
}

fn sort_range<T: SortValue>(
    a: &mut [T],
    aux: &mut [T],
    lo: usize,
    hi: usize,
    ledger: &mut CostLedger,
) {
    if hi - lo < 2 {
        return;
    }
    let mid = lo + (hi - lo) / 2;
    sort_range(a, aux, lo, mid, ledger);
    sort_range(a, aux, mid, hi, ledger);
    merge(a, aux, lo, mid, hi, ledger);
}

fn merge<T: SortValue>(
    a: &mut [T],
    aux: &mut [T],
    lo: usize,
    mid: usize,
    hi: usize,
    ledger: &mut CostLedger,
) {
    let (mut i, mut j, mut k) = (lo, mid, lo);
    let mut compared = 0u64;
    while i < mid && j < hi {
        compared += 1;
        // `<=` takes from the left run on ties, which keeps the sort stable.
        if a[i].value() <= a[j].value() {
            aux[k] = a[i];
            i += 1;
        } else {
            aux[k] = a[j];
            j += 1;
        }
        k += 1;
    }
    let tail = (mid - i) + (hi - j);
    aux[k..k + (mid - i)].copy_from_slice(&a[i..mid]);
    let k2 = k + (mid - i);
    aux[k2..hi].copy_from_slice(&a[j..hi]);
    a[lo..hi].copy_from_slice(&aux[lo..hi]);

    ledger.compare(compared);
    ledger.access(3 * compared + 2 * tail as u64 + 2 * (hi - lo) as u64);
}
