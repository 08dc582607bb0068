use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use luxcil::commands::{
    cmd_assign_cil, cmd_classify, cmd_compare, cmd_fixtures, cmd_report, cmd_score,
    cmd_thresholds, cmd_validate, CompareInputs,
};
use luxcil::emit::OutputFormat;
use luxcil::error::{AppError, AppResult};

/// Context-driven lighting health assessment for facility sub-environments.
#[derive(Parser)]
#[command(name = "luxcil", version, about, max_term_width = 100)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct OutputArgs {
    /// Output format.
    #[arg(long, default_value = "table", value_parser = parse_format)]
    format: OutputFormat,
    /// Write output to a file instead of standard output.
    #[arg(long)]
    out: Option<String>,
}

fn parse_format(token: &str) -> Result<OutputFormat, String> {
    OutputFormat::from_token(token).map_err(|e| e.to_string())
}

#[derive(Subcommand)]
enum Command {
    /// List each environment with its derived (or overridden) criticality level.
    AssignCil {
        /// Profile configuration file.
        #[arg(long)]
        profiles: String,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Print the generated health-status interval schemes.
    Thresholds {
        /// Profile configuration file.
        #[arg(long)]
        profiles: String,
        /// Limit output to one parameter (token such as lux, ugr, eml).
        #[arg(long)]
        param: Option<String>,
        /// Append the ledger of known golden-table deviations.
        #[arg(long)]
        deviations: bool,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Classify every reading of a measurement file.
    Classify {
        #[arg(long)]
        profiles: String,
        /// Measurement CSV file.
        #[arg(long)]
        measurements: String,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Score a measurement file and print the per-parameter medians.
    Score {
        #[arg(long)]
        profiles: String,
        /// Measurement CSV file.
        #[arg(long)]
        measurements: String,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Compare two or more scored surveys: medians, averages, deltas, radar data.
    Compare {
        /// Structured score documents produced by `score --format structured`.
        #[arg(value_name = "SCORES")]
        scores: Vec<String>,
        /// Score measurement CSVs on the fly (requires --profiles).
        #[arg(long)]
        measurements: Vec<String>,
        #[arg(long)]
        profiles: Option<String>,
        /// Append a series holding the per-parameter average.
        #[arg(long)]
        include_average: bool,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Full assessment report: statuses, colours, anomalies, over-provision audit.
    Report {
        #[arg(long)]
        profiles: String,
        /// Measurement CSV file.
        #[arg(long)]
        measurements: String,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Parse and validate inputs, printing a summary.
    Validate {
        #[arg(long)]
        profiles: String,
        /// Measurement CSV files.
        #[arg(long)]
        measurements: Vec<String>,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Print the paths of the bundled example corpus.
    Fixtures,
}

fn run(cli: Cli) -> AppResult<()> {
    let (text, output) = match cli.command {
        Command::AssignCil { profiles, output } => {
            (cmd_assign_cil(&profiles, output.format)?, output)
        }
        Command::Thresholds { profiles, param, deviations, output } => (
            cmd_thresholds(&profiles, param.as_deref(), deviations, output.format)?,
            output,
        ),
        Command::Classify { profiles, measurements, output } => {
            (cmd_classify(&profiles, &measurements, output.format)?, output)
        }
        Command::Score { profiles, measurements, output } => {
            (cmd_score(&profiles, &measurements, output.format)?, output)
        }
        Command::Compare { scores, measurements, profiles, include_average, output } => (
            cmd_compare(
                CompareInputs {
                    score_docs: &scores,
                    profiles: profiles.as_deref(),
                    measurements: &measurements,
                },
                include_average,
                output.format,
            )?,
            output,
        ),
        Command::Report { profiles, measurements, output } => {
            (cmd_report(&profiles, &measurements, output.format)?, output)
        }
        Command::Validate { profiles, measurements, output } => {
            (cmd_validate(&profiles, &measurements)?, output)
        }
        Command::Fixtures => (
            cmd_fixtures(),
            OutputArgs { format: OutputFormat::Table, out: None },
        ),
    };
    match output.out {
        Some(path) => {
            let mut file = std::fs::File::create(&path).map_err(|e| AppError::io(&path, e))?;
            file.write_all(text.as_bytes()).map_err(|e| AppError::io(&path, e))?;
        }
        None => {
            print!("{text}");
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(error) => {
            eprintln!("error: {error}");
            ExitCode::from(error.category().exit_code() as u8)
        }
    }
}
