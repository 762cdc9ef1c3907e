use std::fs::File;
use std::io::{BufReader, BufWriter, Read, Write};
use std::path::Path;

use serde::{Deserialize, Serialize};

use super::{AggregateRow, ReportError};
use crate::algorithm::AlgorithmId;
use crate::harness::ResultRecord;
use crate::metering::CostLedger;

pub const RAW_HEADER: &str =
    "n,m,trial,algorithm,array_accesses,comparisons,divisions,modulos,bitwise_ops,total_units,wall_ns";
pub const AGGREGATE_HEADER: &str = "n,algorithm,mean_units,ln_mean_units";

#[derive(Debug, Serialize, Deserialize)]
struct RawRow {
    n: usize,
    m: u64,
    trial: u32,
    algorithm: AlgorithmId,
    array_accesses: u64,
    comparisons: u64,
    divisions: u64,
    modulos: u64,
    bitwise_ops: u64,
    total_units: u64,
    wall_ns: u64,
}

impl From<&ResultRecord> for RawRow {
    fn from(r: &ResultRecord) -> Self {
        Self {
            n: r.n,
            m: r.m,
            trial: r.trial,
            algorithm: r.algorithm,
            array_accesses: r.cost.array_accesses,
            comparisons: r.cost.comparisons,
            divisions: r.cost.divisions,
            modulos: r.cost.modulos,
            bitwise_ops: r.cost.bitwise_ops,
            total_units: r.cost.total_units(),
            wall_ns: r.wall_ns,
        }
    }
}

#[derive(Debug, Serialize, Deserialize)]
struct AggRow {
    n: usize,
    algorithm: AlgorithmId,
    mean_units: f64,
    ln_mean_units: f64,
}

fn io_err(path: &Path) -> impl FnOnce(std::io::Error) -> ReportError + '_ {
    move |source| ReportError::Io {
        path: path.to_path_buf(),
        source,
    }
}

fn csv_err(path: &Path, err: csv::Error) -> ReportError {
    let row = err.position().map_or(0, |p| p.line());
    match err.into_kind() {
        csv::ErrorKind::Io(source) => ReportError::Io {
            path: path.to_path_buf(),
            source,
        },
        kind => ReportError::Malformed {
            path: path.to_path_buf(),
            row,
            message: format!("{kind:?}"),
        },
    }
}

fn write_rows<S: Serialize>(
    path: &Path,
    header: &str,
    rows: impl Iterator<Item = S>,
) -> Result<(), ReportError> {
    let file = File::create(path).map_err(io_err(path))?;
    let mut out = BufWriter::new(file);
    writeln!(out, "{header}").map_err(io_err(path))?;
    {
        let mut w = csv::WriterBuilder::new()
            .has_headers(false)
            .terminator(csv::Terminator::Any(b'\n'))
            .from_writer(&mut out);
        for row in rows {
            w.serialize(row).map_err(|e| csv_err(path, e))?;
        }
        w.flush().map_err(io_err(path))?;
    }
    out.flush().map_err(io_err(path))
}

fn read_rows<D: for<'de> Deserialize<'de>>(
    path: &Path,
    header: &str,
) -> Result<Vec<D>, ReportError> {
    let file = File::open(path).map_err(io_err(path))?;
    read_rows_from(BufReader::new(file), path, header)
}

fn read_rows_from<R: Read, D: for<'de> Deserialize<'de>>(
    reader: R,
    path: &Path,
    header: &str,
) -> Result<Vec<D>, ReportError> {
    let mut r = csv::ReaderBuilder::new()
        .has_headers(true)
        .from_reader(reader);
    let found = r
        .headers()
        .map_err(|e| csv_err(path, e))?
        .iter()
        .collect::<Vec<_>>()
        .join(",");
    if found != header {
        return Err(ReportError::Malformed {
            path: path.to_path_buf(),
            row: 1,
            message: format!("expected header `{header}`, found `{found}`"),
        });
    }
    r.deserialize()
        .map(|row| row.map_err(|e| csv_err(path, e)))
        .collect()
}

/// Writes one row per record in the raw schema.
pub fn write_raw_csv(path: &Path, records: &[ResultRecord]) -> Result<(), ReportError> {
    write_rows(path, RAW_HEADER, records.iter().map(RawRow::from))
}

pub fn read_raw_csv(path: &Path) -> Result<Vec<ResultRecord>, ReportError> {
    let rows: Vec<RawRow> = read_rows(path, RAW_HEADER)?;
    rows.into_iter()
        .enumerate()
        .map(|(i, row)| {
            let cost = CostLedger {
                array_accesses: row.array_accesses,
                comparisons: row.comparisons,
                divisions: row.divisions,
                modulos: row.modulos,
                bitwise_ops: row.bitwise_ops,
                ..CostLedger::default()
            };
            if cost.total_units() != row.total_units {
                return Err(ReportError::Malformed {
                    path: path.to_path_buf(),
                    row: i as u64 + 2,
                    message: "total_units does not match the weighted counters".into(),
                });
            }
            Ok(ResultRecord {
                n: row.n,
                m: row.m,
                trial: row.trial,
                algorithm: row.algorithm,
                cost,
                wall_ns: row.wall_ns,
            })
        })
        .collect()
}

pub fn write_aggregate_csv(path: &Path, rows: &[AggregateRow]) -> Result<(), ReportError> {
    write_rows(
        path,
        AGGREGATE_HEADER,
        rows.iter().map(|r| AggRow {
            n: r.n,
            algorithm: r.algorithm,
            mean_units: r.mean_units,
            ln_mean_units: r.ln_mean_units,
        }),
    )
}

pub fn read_aggregate_csv(path: &Path) -> Result<Vec<AggregateRow>, ReportError> {
    let rows: Vec<AggRow> = read_rows(path, AGGREGATE_HEADER)?;
    Ok(rows
        .into_iter()
        .map(|r| AggregateRow {
            n: r.n,
            algorithm: r.algorithm,
            mean_units: r.mean_units,
            ln_mean_units: r.ln_mean_units,
        })
        .collect())
}
