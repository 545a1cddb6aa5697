//! Command-line front end for the verification suites.

use clap::{Parser, Subcommand, ValueEnum};
use ncp4::report::{write_human, write_json_lines, CheckRecord};
use ncp4::scenario::Scenario;
use ncp4::suites::run_scenario;
use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "ncp4", about = "Verification suites for noncommutative Painleve IV structures")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    #[value(name = "json-lines")]
    JsonLines,
    Human,
}

#[derive(Subcommand)]
enum Command {
    /// Run a suite against a scenario file
    Run {
        /// Path to a JSON scenario description
        #[arg(long)]
        scenario: PathBuf,
        /// Suite id (ring|qdet|toda|p4|backlund|toda2p4|lax|ham|bilinear|all)
        #[arg(long)]
        suite: String,
        /// Output format
        #[arg(long, value_enum, default_value = "json-lines")]
        format: Format,
        /// Write the report to this file instead of stdout
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run suites on a built-in scenario
    Demo {
        /// Suite id (ring|qdet|toda|p4|backlund|toda2p4|lax|ham|bilinear|all)
        #[arg(long, default_value = "all")]
        suite: String,
        /// Matrix dimension of the coefficients
        #[arg(long, default_value_t = 2)]
        dim: usize,
        /// Truncation order of the series
        #[arg(long, default_value_t = 12)]
        order: usize,
        /// Seed for the randomized inputs
        #[arg(long, default_value_t = 42)]
        seed: u64,
        /// Output format
        #[arg(long, value_enum, default_value = "json-lines")]
        format: Format,
        /// Write the report to this file instead of stdout
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn emit(records: &[CheckRecord], format: Format, out: Option<PathBuf>) -> std::io::Result<bool> {
    let mut buf = Vec::new();
    match format {
        Format::JsonLines => write_json_lines(records, &mut buf)?,
        Format::Human => write_human(records, &mut buf)?,
    }
    match out {
        Some(path) => fs::write(path, &buf)?,
        None => std::io::stdout().write_all(&buf)?,
    }
    Ok(records.iter().all(|r| r.pass))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = (|| -> Result<bool, String> {
        let (scenario, suite, format, out) = match cli.command {
            Command::Run {
                scenario,
                suite,
                format,
                out,
            } => {
                let text = fs::read_to_string(&scenario)
                    .map_err(|e| format!("cannot read {}: {e}", scenario.display()))?;
                (Scenario::from_json(&text).map_err(|e| e.to_string())?, suite, format, out)
            }
            Command::Demo {
                suite,
                dim,
                order,
                seed,
                format,
                out,
            } => (Scenario::demo(dim, order, seed), suite, format, out),
        };
        let records = run_scenario(&suite, &scenario).map_err(|e| e.to_string())?;
        emit(&records, format, out).map_err(|e| e.to_string())
    })();
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
