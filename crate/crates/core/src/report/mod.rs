//! Aggregation of sweep records, CSV persistence, and SVG line plots.

mod csv_io;
mod plot;

use std::collections::BTreeMap;
use std::path::PathBuf;

use thiserror::Error;

use crate::algorithm::AlgorithmId;
use crate::harness::ResultRecord;

pub use csv_io::{
    read_aggregate_csv, read_raw_csv, write_aggregate_csv, write_raw_csv, AGGREGATE_HEADER,
    RAW_HEADER,
};
pub use plot::{render_plot, render_svg};

#[derive(Debug, Error)]
pub enum ReportError {
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("{path}: malformed CSV at row {row}: {message}")]
    Malformed {
        path: PathBuf,
        row: u64,
        message: String,
    },
    #[error("nothing to plot")]
    Empty,
}

/// Mean cost of one algorithm at one array length.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AggregateRow {
    pub n: usize,
    pub algorithm: AlgorithmId,
    pub mean_units: f64,
    pub ln_mean_units: f64,
}

impl AggregateRow {
    pub fn new(n: usize, algorithm: AlgorithmId, mean_units: f64) -> Self {
        Self {
            n,
            algorithm,
            mean_units,
            ln_mean_units: mean_units.ln(),
        }
    }
}

/// Mean total units per `(algorithm, n)`, ordered by algorithm then length.
///
/// The result does not depend on the order of `records`.
pub fn aggregate(records: &[ResultRecord]) -> Vec<AggregateRow> {
    let mut groups: BTreeMap<(AlgorithmId, usize), (u128, u64)> = BTreeMap::new();
    for r in records {
        let slot = groups.entry((r.algorithm, r.n)).or_default();
        slot.0 += r.cost.total_units() as u128;
        slot.1 += 1;
    }
    groups
        .into_iter()
        .map(|((algorithm, n), (sum, count))| {
            AggregateRow::new(n, algorithm, sum as f64 / count as f64)
        })
        .collect()
}
