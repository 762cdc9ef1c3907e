//! `qrsort`: sort integer files, run cost sweeps, and plot their results.

mod bench;
mod error;
mod plot;
mod selftest;
mod sort;

use std::process::ExitCode;

use clap::{Parser, Subcommand};

#[derive(Debug, Parser)]
#[command(
    name = "qrsort",
    version,
    about = "Instrumented integer sorting and cost sweeps"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Sort a file holding one integer per line.
    Sort(sort::SortArgs),
    /// Sweep array lengths, metering every algorithm.
    Bench(bench::BenchArgs),
    /// Render an aggregate CSV as an SVG line chart.
    Plot(plot::PlotArgs),
    /// Check the key decomposition and key-mode equivalences on random cases.
    Selftest(selftest::SelftestArgs),
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Sort(args) => sort::run(args),
        Command::Bench(args) => bench::run(args),
        Command::Plot(args) => plot::run(args),
        Command::Selftest(args) => selftest::run(args),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("qrsort: {err}");
            ExitCode::from(err.exit_code())
        }
    }
}
