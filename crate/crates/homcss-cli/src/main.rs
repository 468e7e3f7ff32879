//! Single command-line entry point for the workbench: complex builders,
//! code parameter reports, exact arithmetic-group calculators and volume
//! bounds. Every command emits a JSON report that embeds the resolved
//! configuration; identical configuration and seed give byte-identical
//! output.
//!
//! Exit codes: 0 success, 2 validation failure, 3 enumeration budget
//! refusal, 64 usage error, 1 anything else.

mod commands;
mod report;
mod spec;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand};

use report::{CliError, Report};

#[derive(Parser, Debug)]
#[command(
    name = "homcss",
    about = "Workbench for homological CSS codes over GF(2)",
    disable_help_subcommand = true
)]
struct Cli {
    /// Print a one-line human summary instead of the JSON report.
    #[arg(long, global = true)]
    quiet: bool,

    /// Also write the JSON report to this file.
    #[arg(long, short, global = true)]
    output: Option<String>,

    /// Size of the worker pool for parallel searches.
    #[arg(long, global = true)]
    workers: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Build, validate and transform chain complexes.
    #[command(subcommand)]
    Complex(commands::complex::ComplexCmd),
    /// CSS code parameters, distances, systoles and reports.
    #[command(subcommand)]
    Code(commands::code::CodeCmd),
    /// Exact arithmetic over Z[√2]: forms, congruences, quotients.
    #[command(subcommand)]
    Arith(commands::arith::ArithCmd),
    /// Sphere and hyperbolic ball volumes and the derived bounds.
    #[command(subcommand)]
    Bounds(commands::bounds::BoundsCmd),
}

fn main() {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // clap reserves 2 for usage errors; the interface here uses 64
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 64,
            };
            let _ = e.print();
            std::process::exit(code);
        }
    };

    let run = || -> Result<Report, CliError> {
        match &cli.command {
            Command::Complex(cmd) => commands::complex::run(cmd),
            Command::Code(cmd) => commands::code::run(cmd),
            Command::Arith(cmd) => commands::arith::run(cmd),
            Command::Bounds(cmd) => commands::bounds::run(cmd),
        }
    };

    let outcome = match cli.workers {
        Some(n) if n >= 1 => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(n)
                .build()
                .expect("worker pool");
            pool.install(run)
        }
        Some(_) => Err(CliError::Usage("workers must be ≥ 1".into())),
        None => run(),
    };

    match outcome {
        Ok(report) => {
            let text = report.render();
            if cli.quiet {
                println!("{}", report.summary);
            } else {
                print!("{text}");
            }
            if let Some(path) = &cli.output {
                if let Err(e) = std::fs::write(path, &text) {
                    eprintln!("error: cannot write {path}: {e}");
                    std::process::exit(1);
                }
            }
            std::process::exit(report.exit);
        }
        Err(err) => {
            eprintln!("error: {}", err.message());
            std::process::exit(err.exit_code());
        }
    }
}
