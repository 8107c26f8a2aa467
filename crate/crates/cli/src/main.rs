mod commands;
mod manifest;
mod svg;

use std::path::PathBuf;
use std::process::ExitCode;

use chrono::NaiveDate;
use clap::{Args, Parser, Subcommand};
use vessel_demand::profiles::Aggregation;
use vessel_demand::FilterConfig;

#[derive(Debug, Parser)]
#[command(name = "vessel-demand", version, about = "Electric-vessel charging demand from port-call records")]
struct Cli {
    #[command(flatten)]
    filter: FilterArgs,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct FilterArgs {
    /// First date of the observation window (inclusive, UTC)
    #[arg(long, global = true, default_value = "2019-01-01")]
    window_start: NaiveDate,

    /// Last date of the observation window (inclusive, UTC)
    #[arg(long, global = true, default_value = "2019-12-31")]
    window_end: NaiveDate,

    /// Keep vessels strictly shorter than this many metres
    #[arg(long, global = true, default_value_t = 25.0)]
    max_length: f64,

    /// Keep vessel classes with at least this many calls
    #[arg(long, global = true, default_value_t = 500)]
    min_freq: usize,
}

impl FilterArgs {
    fn config(&self) -> FilterConfig {
        FilterConfig {
            window_start: self.window_start,
            window_end: self.window_end,
            max_length_m: self.max_length,
            min_type_frequency: self.min_freq,
        }
    }
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Write a deterministic synthetic port-call CSV
    Synth {
        #[arg(long, default_value_t = 42)]
        seed: u64,
        #[arg(short, long)]
        out: PathBuf,
    },
    /// Print filter-stage counts and the class frequency table
    Summary {
        #[arg(short, long)]
        input: PathBuf,
    },
    /// Export the weekday × hour arrival counts of one class
    Profile {
        #[arg(short, long)]
        input: PathBuf,
        #[arg(short, long)]
        class: String,
        /// alldays or mon..sun, for the printed mean arrivals
        #[arg(short, long, default_value = "alldays")]
        aggregation: Aggregation,
        /// Accept a class with no calls and write an empty export
        #[arg(long)]
        allow_empty: bool,
        #[arg(short, long)]
        out: PathBuf,
    },
    /// Compute per-class and total demand curves for a scenario
    Demand {
        #[arg(short, long)]
        input: PathBuf,
        /// Scenario file of `key = value` lines
        #[arg(short, long, conflicts_with = "adoption")]
        scenario: Option<PathBuf>,
        /// Inline alternative to a scenario file: one fraction for every class
        #[arg(long)]
        adoption: Option<f64>,
        #[arg(short, long)]
        out_dir: PathBuf,
        /// Also render demand.svg
        #[arg(long)]
        svg: bool,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let filter = cli.filter.config();
    let result = match cli.command {
        Command::Synth { seed, out } => commands::synth(seed, &out, &filter),
        Command::Summary { input } => commands::summary(&input, &filter),
        Command::Profile {
            input,
            class,
            aggregation,
            allow_empty,
            out,
        } => commands::profile(&input, &class, aggregation, allow_empty, &out, &filter),
        Command::Demand {
            input,
            scenario,
            adoption,
            out_dir,
            svg,
        } => commands::demand(
            &input,
            commands::ScenarioSource::from_args(scenario, adoption),
            &out_dir,
            svg,
            &filter,
        ),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::FAILURE
        }
    }
}
