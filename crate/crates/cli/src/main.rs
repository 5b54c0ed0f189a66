mod commands;
mod output;

use std::io::{self, BufWriter, Write};
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use commands::{CliError, Method};
use output::{Document, Format};

/// Draws until the first good object, without replacement.
#[derive(Debug, Parser)]
#[command(name = "urn", version, about)]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Csv, global = true)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Exact and floating-point pmf/cdf over the whole support.
    Table {
        /// Total number of objects, N.
        #[arg(long = "n")]
        total: u64,
        /// Number of good objects, K.
        #[arg(long = "k")]
        good: u64,
    },
    /// Mean, variance, median, mode and support.
    Stats {
        #[arg(long = "n")]
        total: u64,
        #[arg(long = "k")]
        good: u64,
    },
    /// Random draws of the first-success index.
    Sample {
        #[arg(long = "n")]
        total: u64,
        #[arg(long = "k")]
        good: u64,
        #[arg(long, default_value_t = 1)]
        count: u64,
        #[arg(long, env = "URN_SEED", default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, default_value_t = Method::Urn)]
        method: Method,
    },
    /// Distance to the geometric law along N with K/N = p_num/p_den.
    Converge {
        #[arg(long)]
        p_num: u64,
        #[arg(long)]
        p_den: u64,
        /// Comma-separated list of N.
        #[arg(long, value_delimiter = ',', required = true)]
        ns: Vec<u64>,
    },
    /// Verify every closed form against independent computations.
    Check {
        #[arg(long)]
        max_n: u64,
        /// Lift the N <= 20 bound on exhaustive enumeration.
        #[arg(long)]
        force: bool,
    },
}

fn run(command: Command) -> Result<Document, CliError> {
    match command {
        Command::Table { total, good } => commands::table(total, good),
        Command::Stats { total, good } => commands::stats(total, good),
        Command::Sample {
            total,
            good,
            count,
            seed,
            method,
        } => commands::sample(total, good, count, seed, method),
        Command::Converge { p_num, p_den, ns } => commands::converge(p_num, p_den, &ns),
        Command::Check { max_n, force } => commands::check(max_n, force),
    }
}

fn emit(doc: &Document, format: Format) -> ExitCode {
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    match doc.write(format, &mut out).and_then(|_| out.flush()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) if e.kind() == io::ErrorKind::BrokenPipe => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("urn: write failed: {e}");
            ExitCode::FAILURE
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(doc) => emit(&doc, cli.format),
        Err(err) => {
            if let CliError::CheckFailed { summary, .. } = &err {
                emit(summary, cli.format);
            }
            eprintln!("urn: {err}");
            ExitCode::from(err.exit_code())
        }
    }
}
