use std::path::PathBuf;

use clap::Args;
use qrsort_core::report::{read_aggregate_csv, render_plot};

use crate::error::CliError;

#[derive(Debug, Args)]
pub struct PlotArgs {
    /// Aggregate CSV written by `bench --out-agg`.
    #[arg(long = "in")]
    input: PathBuf,
    #[arg(long)]
    out: PathBuf,
}

pub fn run(args: PlotArgs) -> Result<(), CliError> {
    let rows = read_aggregate_csv(&args.input)?;
    render_plot(&rows, &args.out)?;
    Ok(())
}
