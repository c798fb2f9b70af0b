//! `adbi`: build, query and evaluate approximation-degree-based models.

use std::path::PathBuf;
use std::process::ExitCode;

use adbi::io::{AxisSpec, TestFunction};
use adbi::ErrorClass;
use clap::{Parser, Subcommand, ValueEnum};

mod commands;

/// Exit codes, one per error class.
pub mod exit {
    pub const FAILURE: u8 = 1;
    pub const USAGE: u8 = 2;
    pub const IO: u8 = 3;
    pub const FORMAT: u8 = 4;
    pub const DATA: u8 = 5;
    pub const DOMAIN: u8 = 6;
    pub const UNSUPPORTED: u8 = 7;
    pub const NONDETERMINISTIC: u8 = 8;
    pub const TOLERANCE: u8 = 9;
}

/// Errors raised by the front end itself.
#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Nondeterministic(String),
    ToleranceExceeded { max_abs: f64, tolerance: f64 },
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Usage(m) => write!(f, "{m}"),
            CliError::Nondeterministic(m) => write!(f, "results differ across thread counts: {m}"),
            CliError::ToleranceExceeded { max_abs, tolerance } => {
                write!(f, "max-abs error {max_abs} exceeds tolerance {tolerance}")
            }
        }
    }
}

impl std::error::Error for CliError {}

#[derive(Debug, Parser)]
#[command(
    name = "adbi",
    version,
    about = "Approximation-degree-based interpolation and instance-based learning"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum ModelKind {
    Grid,
    Classifier,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Sample a built-in function on a grid and write a training CSV.
    Gen {
        /// neg_sum_squares, exp3, peaks or affine:c0,c1,...
        #[arg(long)]
        function: TestFunction,
        /// Axis nodes as START:STOP:STEP or START:STOP:n=COUNT; repeat per axis.
        #[arg(long = "axis", required = true, allow_hyphen_values = true)]
        axes: Vec<AxisSpec>,
        /// Replicate a single --axis over this many dimensions.
        #[arg(long)]
        dims: Option<usize>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Fit a model from a training CSV and write the model file.
    Build {
        train: PathBuf,
        #[arg(long, value_enum, default_value = "grid")]
        kind: ModelKind,
        /// Classifier radii: R, R1,R2,..., or L1:R1,L2:R2,...
        #[arg(long, allow_hyphen_values = true)]
        radii: Option<String>,
        #[arg(long)]
        out: PathBuf,
    },
    /// Answer every row of a query CSV.
    Query {
        model: PathBuf,
        queries: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Evaluate queries on a thread pool.
        #[arg(long)]
        parallel: bool,
        /// Worker count for --parallel (defaults to all cores).
        #[arg(long, env = "ADBI_THREADS")]
        threads: Option<usize>,
        /// Print values with full precision instead of four decimals.
        #[arg(long)]
        full_precision: bool,
    },
    /// Measure error against a built-in function.
    Eval {
        /// Model file to evaluate; omit to build models from --nodes.
        model: Option<PathBuf>,
        #[arg(long)]
        oracle: TestFunction,
        /// Sample lattice, one spec per axis (or one with --dims).
        #[arg(long = "samples", required = true, allow_hyphen_values = true)]
        samples: Vec<AxisSpec>,
        /// Training node spec applied to every axis; repeat for a refinement sweep.
        #[arg(long = "nodes", allow_hyphen_values = true)]
        nodes: Vec<AxisSpec>,
        #[arg(long)]
        dims: Option<usize>,
        /// Fail when the max-abs error exceeds this value.
        #[arg(long)]
        tolerance: Option<f64>,
    },
    /// Evaluate a model on a dense grid for external plotting.
    Plotdata {
        model: PathBuf,
        /// Dense grid spec per axis (or one replicated); defaults to 81 nodes over the model domain.
        #[arg(long = "grid", allow_hyphen_values = true)]
        grid: Vec<AxisSpec>,
        /// Fix one axis of a 3D model, e.g. z=0 or 3=0.5; repeatable.
        #[arg(long = "slice", allow_hyphen_values = true)]
        slices: Vec<String>,
        /// Allow models of any dimension, emitting raw rows.
        #[arg(long)]
        flat: bool,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        full_precision: bool,
    },
    /// Time batch queries across thread counts and check they agree.
    Bench {
        model: Option<PathBuf>,
        queries: Option<PathBuf>,
        #[arg(long, value_delimiter = ',', default_values_t = vec![1usize, 2, 4, 8])]
        threads: Vec<usize>,
        /// Dimensions for a generated-model sweep, e.g. 2,4,8.
        #[arg(long, value_delimiter = ',')]
        sweep_dims: Vec<usize>,
        #[arg(long, default_value_t = 5)]
        nodes_per_axis: usize,
        #[arg(long, default_value_t = 10_000)]
        sweep_queries: usize,
    },
}

fn exit_code(err: &anyhow::Error) -> u8 {
    if let Some(e) = err.downcast_ref::<adbi::Error>() {
        return match e.class() {
            ErrorClass::Io => exit::IO,
            ErrorClass::Format => exit::FORMAT,
            ErrorClass::Data => exit::DATA,
            ErrorClass::Domain => exit::DOMAIN,
            ErrorClass::Unsupported => exit::UNSUPPORTED,
        };
    }
    match err.downcast_ref::<CliError>() {
        Some(CliError::Usage(_)) => exit::USAGE,
        Some(CliError::Nondeterministic(_)) => exit::NONDETERMINISTIC,
        Some(CliError::ToleranceExceeded { .. }) => exit::TOLERANCE,
        None => exit::FAILURE,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Gen {
            function,
            axes,
            dims,
            out,
        } => commands::gen::run(&function, &axes, dims, out.as_deref()),
        Command::Build {
            train,
            kind,
            radii,
            out,
        } => commands::build::run(&train, kind, radii.as_deref(), &out),
        Command::Query {
            model,
            queries,
            out,
            parallel,
            threads,
            full_precision,
        } => commands::query::run(
            &model,
            &queries,
            out.as_deref(),
            parallel.then_some(threads),
            full_precision,
        ),
        Command::Eval {
            model,
            oracle,
            samples,
            nodes,
            dims,
            tolerance,
        } => commands::eval::run(model.as_deref(), &oracle, &samples, &nodes, dims, tolerance),
        Command::Plotdata {
            model,
            grid,
            slices,
            flat,
            out,
            full_precision,
        } => commands::plotdata::run(&model, &grid, &slices, flat, out.as_deref(), full_precision),
        Command::Bench {
            model,
            queries,
            threads,
            sweep_dims,
            nodes_per_axis,
            sweep_queries,
        } => commands::bench::run(
            model.as_deref(),
            queries.as_deref(),
            &threads,
            &sweep_dims,
            nodes_per_axis,
            sweep_queries,
        ),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(exit_code(&err))
        }
    }
}
