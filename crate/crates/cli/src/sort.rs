use std::fs;
use std::io::{BufWriter, Write};
use std::path::{Path, PathBuf};

use clap::Args;
use qrsort_core::{
    divisor_for, qr_sort_slice, run_algorithm, AlgorithmId, CostLedger, DivisorStrategy, QrKeyMode,
    RadixBase, SortParams, DEFAULT_BIN_CAP,
};

use crate::error::CliError;

#[derive(Debug, Args)]
pub struct SortArgs {
    /// Input file, one decimal integer per line.
    input: PathBuf,
    #[arg(short, long)]
    output: PathBuf,
    #[arg(short, long, default_value = "qr")]
    algorithm: AlgorithmId,
    /// Explicit QR divisor; overrides --strategy.
    #[arg(long, conflicts_with = "strategy")]
    divisor: Option<u64>,
    /// sqrt, bypass, pow2 or fixed:<d>.
    #[arg(long, default_value = "sqrt")]
    strategy: DivisorStrategy,
    /// general, subtraction-free or bitwise. Defaults to the strategy's mode.
    #[arg(long)]
    mode: Option<QrKeyMode>,
    /// Radix base: an integer >= 2, or `n` for the input length.
    #[arg(long, default_value = "n")]
    radix_base: RadixBase,
    #[arg(long, default_value_t = DEFAULT_BIN_CAP)]
    bin_cap: u64,
    /// Print the cost ledger to stderr as one CSV line:
    /// array_accesses,comparisons,divisions,modulos,bitwise_ops,total_units.
    #[arg(long)]
    stats: bool,
}

pub fn read_integers(path: &Path) -> Result<Vec<i64>, CliError> {
    let text = fs::read_to_string(path).map_err(CliError::io(path))?;
    text.lines()
        .enumerate()
        .map(|(i, line)| {
            let line = line.trim();
            line.parse::<i64>().map_err(|_| {
                CliError::usage(format!(
                    "{}: line {}: not a 64-bit integer: {line:?}",
                    path.display(),
                    i + 1
                ))
            })
        })
        .collect()
}

pub fn write_integers(path: &Path, values: &[i64]) -> Result<(), CliError> {
    let file = fs::File::create(path).map_err(CliError::io(path))?;
    let mut w = BufWriter::new(file);
    for v in values {
        writeln!(w, "{v}").map_err(CliError::io(path))?;
    }
    w.flush().map_err(CliError::io(path))
}

pub fn run(args: SortArgs) -> Result<(), CliError> {
    let is_qr = args.algorithm == AlgorithmId::Qr;
    if !is_qr && (args.divisor.is_some() || args.mode.is_some()) {
        return Err(CliError::usage(
            "--divisor and --mode only apply to --algorithm qr",
        ));
    }
    if args.bin_cap == 0 {
        return Err(CliError::usage("--bin-cap must be at least 1"));
    }

    let values = read_integers(&args.input)?;
    let mut ledger = CostLedger::new();
    let sorted = if is_qr && (args.divisor.is_some() || args.mode.is_some()) {
        let mode = args.mode.unwrap_or(match args.divisor {
            Some(_) => QrKeyMode::General,
            None => args.strategy.key_mode(),
        });
        let divisor = match args.divisor {
            Some(d) => Some(d),
            None => divisor_for(&values, args.strategy)?,
        };
        match divisor {
            Some(d) => qr_sort_slice(&values, d, mode, &mut ledger)?,
            None => Vec::new(),
        }
    } else {
        let params = SortParams {
            strategy: args.strategy,
            radix_base: args.radix_base,
            bin_cap: args.bin_cap,
        };
        run_algorithm(args.algorithm, &values, &params, &mut ledger)?
    };
    write_integers(&args.output, &sorted)?;

    if args.stats {
        eprintln!(
            "{},{},{},{},{},{}",
            ledger.array_accesses,
            ledger.comparisons,
            ledger.divisions,
            ledger.modulos,
            ledger.bitwise_ops,
            ledger.total_units()
        );
    }
    Ok(())
}
