use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Duration;

use clap::{Parser, Subcommand};

use cremona_core::chartab::{dixon_character_table, TableExport};
use cremona_core::permgrp::parse_group_spec;
use cremona_verify::{exit_code, run_suite, write_report, ReportFormat, RunOptions, Status, Suite};

const EXIT_USAGE: u8 = 2;
const EXIT_IO: u8 = 3;

#[derive(Parser)]
#[command(name = "cremona", version, about = "Exact verification of finite-group and Fano-threefold computations")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run a check suite.
    Verify {
        #[arg(long, value_parser = parse_suite)]
        suite: Suite,
        #[arg(long)]
        json: Option<PathBuf>,
        #[arg(long)]
        markdown: Option<PathBuf>,
        /// Wall-clock budget per check, in seconds.
        #[arg(long, default_value_t = 600.0)]
        budget: f64,
        #[arg(long, default_value_t = 1)]
        workers: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Compute a character table and print it as JSON.
    Table {
        /// Group spec, e.g. `A7`, `PSL2(11)` or `coset:A7/PSL2(7)`.
        #[arg(long)]
        group: String,
        #[arg(long)]
        json: Option<PathBuf>,
    },
}

fn parse_suite(s: &str) -> Result<Suite, String> {
    s.parse().map_err(|e: cremona_verify::UnknownSuite| e.to_string())
}

fn main() -> ExitCode {
    match Cli::parse().command {
        Command::Verify { suite, json, markdown, budget, workers, seed } => {
            if !(budget.is_finite() && budget > 0.0) || workers == 0 {
                eprintln!("error: --budget must be positive and --workers at least 1");
                return ExitCode::from(EXIT_USAGE);
            }
            let opts = RunOptions { budget: Duration::from_secs_f64(budget), workers, seed };
            let results = run_suite(suite, &opts);
            for r in &results {
                let mark = match r.status {
                    Status::Pass => "PASS",
                    Status::Fail => "FAIL",
                    Status::Skipped => "SKIP",
                };
                println!("{mark} {} ({:.2} s)", r.check_id, r.elapsed.as_secs_f64());
            }
            for (path, format) in [(json, ReportFormat::Json), (markdown, ReportFormat::Markdown)] {
                if let Some(path) = path {
                    if let Err(e) = write_report(&path, format, suite, &opts, &results) {
                        eprintln!("error: cannot write {}: {e}", path.display());
                        return ExitCode::from(EXIT_IO);
                    }
                }
            }
            ExitCode::from(exit_code(&results) as u8)
        }
        Command::Table { group, json } => {
            let g = match parse_group_spec(&group) {
                Ok(g) => g,
                Err(e) => {
                    eprintln!("error: {e}");
                    return ExitCode::from(EXIT_USAGE);
                }
            };
            let table = g
                .conjugacy_classes(200_000)
                .map_err(|e| e.to_string())
                .and_then(|cc| dixon_character_table(std::sync::Arc::new(cc)).map_err(|e| e.to_string()));
            let table = match table {
                Ok(t) => t,
                Err(e) => {
                    eprintln!("error: {e}");
                    return ExitCode::FAILURE;
                }
            };
            let mut text = serde_json::to_string_pretty(&TableExport::from(&table)).expect("serializable");
            text.push('\n');
            match json {
                Some(path) => {
                    if let Err(e) = std::fs::write(&path, text) {
                        eprintln!("error: cannot write {}: {e}", path.display());
                        return ExitCode::from(EXIT_IO);
                    }
                }
                None => print!("{text}"),
            }
            ExitCode::SUCCESS
        }
    }
}
