use std::fs;
use std::num::NonZeroUsize;
use std::path::PathBuf;

use clap::Args;
use qrsort_core::report::{aggregate, render_svg, write_aggregate_csv, write_raw_csv};
use qrsort_core::{
    run_sweep_with_jobs, AlgorithmId, DivisorStrategy, ExperimentConfig, RadixBase, DEFAULT_BIN_CAP,
};

use crate::error::CliError;

#[derive(Debug, Args)]
pub struct BenchArgs {
    #[arg(long, default_value_t = 10_000)]
    min_length: usize,
    #[arg(long, default_value_t = 1_000_000)]
    max_length: usize,
    #[arg(long, default_value_t = 10_000)]
    length_inc: usize,
    #[arg(long, default_value_t = 0, allow_negative_numbers = true)]
    min_value: i64,
    #[arg(long, default_value_t = 50_000, allow_negative_numbers = true)]
    max_value: i64,
    #[arg(long, default_value_t = 10)]
    trials: u32,
    /// Shuffle seed; falls back to $QRSORT_SEED, then 0.
    #[arg(long, env = "QRSORT_SEED", default_value_t = 0)]
    seed: u64,
    #[arg(
        long,
        value_delimiter = ',',
        default_value = "merge,quick,counting,radix,qr"
    )]
    algorithms: Vec<AlgorithmId>,
    /// QR divisor strategy: sqrt, bypass, pow2 or fixed:<d>.
    #[arg(long, default_value = "pow2")]
    strategy: DivisorStrategy,
    /// Radix base: an integer >= 2, or `n` for the array length.
    #[arg(long, default_value = "n")]
    radix_base: RadixBase,
    #[arg(long, default_value_t = DEFAULT_BIN_CAP)]
    bin_cap: u64,
    #[arg(long, default_value = "raw.csv")]
    out_raw: PathBuf,
    #[arg(long, default_value = "aggregate.csv")]
    out_agg: PathBuf,
    #[arg(long, default_value = "plot.svg")]
    out_plot: PathBuf,
    /// Worker threads for trials. Results do not depend on this.
    #[arg(long, default_value = "1")]
    jobs: NonZeroUsize,
    /// Write wall_ns = 0 so repeated runs produce identical files.
    #[arg(long)]
    omit_wall_time: bool,
}

impl BenchArgs {
    fn config(&self) -> ExperimentConfig {
        ExperimentConfig {
            min_length: self.min_length,
            max_length: self.max_length,
            length_inc: self.length_inc,
            min_value: self.min_value,
            max_value: self.max_value,
            trial_count: self.trials,
            seed: self.seed,
            algorithms: self.algorithms.clone(),
            divisor_strategy: self.strategy,
            radix_base: self.radix_base,
            bin_cap: self.bin_cap,
            record_wall_time: !self.omit_wall_time,
        }
    }
}

pub fn run(args: BenchArgs) -> Result<(), CliError> {
    let config = args.config();
    let outcome = run_sweep_with_jobs(&config, args.jobs)?;
    for skip in &outcome.skips {
        eprintln!(
            "qrsort: skipped {} at n={}, trial {}: {}",
            skip.algorithm, skip.n, skip.trial, skip.reason
        );
    }

    let rows = aggregate(&outcome.records);
    // Render first so a sweep with nothing to plot leaves no partial output.
    let svg = render_svg(&rows)?;
    write_raw_csv(&args.out_raw, &outcome.records)?;
    write_aggregate_csv(&args.out_agg, &rows)?;
    fs::write(&args.out_plot, svg).map_err(CliError::io(&args.out_plot))
}
