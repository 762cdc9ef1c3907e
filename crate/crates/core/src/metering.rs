//! Computational-unit accounting.
//!
//! Every sort in this crate threads a [`CostLedger`] through its inner loops
//! and records operations under the following contract:
//!
//! * a read or write of an element, key, counting bin, or auxiliary slot is
//!   one array access;
//! * a two-element or element-key comparison (min/max scans included) is one
//!   comparison;
//! * an integer division, a modulo, a shift, or an AND is one operation of
//!   its category;
//! * index arithmetic, loop counters, additions and subtractions are free,
//!   as is zero-filled allocation and the copy of the caller's input into a
//!   working buffer.
//!
//! Totals weight divisions and modulos at 15 units and everything else at 1.

use serde::{Deserialize, Serialize};

/// Weight applied to divisions and modulos under the default cost model.
pub const DIV_MOD_WEIGHT: u64 = 15;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum OpCategory {
    Access,
    Compare,
    Division,
    Modulo,
    Bitwise,
}

/// Per-category weights used to fold a ledger into a single unit count.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CostWeights {
    access: u64,
    compare: u64,
    division: u64,
    modulo: u64,
    bitwise: u64,
}

impl CostWeights {
    /// Returns `None` if any weight is zero.
    pub fn new(
        access: u64,
        compare: u64,
        division: u64,
        modulo: u64,
        bitwise: u64,
    ) -> Option<Self> {
        let all = [access, compare, division, modulo, bitwise];
        if all.contains(&0) {
            return None;
        }
        Some(Self {
            access,
            compare,
            division,
            modulo,
            bitwise,
        })
    }

    pub fn weight(&self, category: OpCategory) -> u64 {
        match category {
            OpCategory::Access => self.access,
            OpCategory::Compare => self.compare,
            OpCategory::Division => self.division,
            OpCategory::Modulo => self.modulo,
            OpCategory::Bitwise => self.bitwise,
        }
    }
}

impl Default for CostWeights {
    fn default() -> Self {
        Self {
            access: 1,
            compare: 1,
            division: DIV_MOD_WEIGHT,
            modulo: DIV_MOD_WEIGHT,
            bitwise: 1,
        }
    }
}

/// Operation counters for one sort invocation.
///
/// `counting_passes` and `bins_allocated` are structural counters: they track
/// how many counting-sort passes ran and how many bins those passes used, and
/// carry no weight in [`CostLedger::total_units`].
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CostLedger {
    pub array_accesses: u64,
    pub comparisons: u64,
    pub divisions: u64,
    pub modulos: u64,
    pub bitwise_ops: u64,
    #[serde(skip)]
    pub counting_passes: u64,
    #[serde(skip)]
    pub bins_allocated: u64,
}

impl CostLedger {
    pub fn new() -> Self {
        Self::default()
    }

    #[inline]
    pub fn record(&mut self, category: OpCategory, count: u64) {
        let counter = match category {
            OpCategory::Access => &mut self.array_accesses,
            OpCategory::Compare => &mut self.comparisons,
            OpCategory::Division => &mut self.divisions,
            OpCategory::Modulo => &mut self.modulos,
            OpCategory::Bitwise => &mut self.bitwise_ops,
        };
        *counter += count;
    }

    #[inline]
    pub(crate) fn access(&mut self, count: u64) {
        self.array_accesses += count;
    }

    #[inline]
    pub(crate) fn compare(&mut self, count: u64) {
        self.comparisons += count;
    }

    pub(crate) fn counting_pass(&mut self, bins: usize) {
        self.counting_passes += 1;
        self.bins_allocated += bins as u64;
    }

    /// Weighted total under the default weights.
    pub fn total_units(&self) -> u64 {
        self.weighted_units(&CostWeights::default())
    }

    pub fn weighted_units(&self, weights: &CostWeights) -> u64 {
        self.array_accesses * weights.access
            + self.comparisons * weights.compare
            + self.divisions * weights.division
            + self.modulos * weights.modulo
            + self.bitwise_ops * weights.bitwise
    }

    /// Adds every counter of `other` into `self`.
    pub fn absorb(&mut self, other: &CostLedger) {
        self.array_accesses += other.array_accesses;
        self.comparisons += other.comparisons;
        self.divisions += other.divisions;
        self.modulos += other.modulos;
        self.bitwise_ops += other.bitwise_ops;
        self.counting_passes += other.counting_passes;
        self.bins_allocated += other.bins_allocated;
    }
}
