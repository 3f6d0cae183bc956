//! `csf`: spider trees, chromatic symmetric functions, and Schur positivity
//! sweeps, with JSON on stdout and progress on stderr.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use csf_cli::{render, run_chartable, run_expand, run_spider, run_verify};

#[derive(Parser)]
#[command(
    name = "csf",
    about = "Chromatic symmetric functions of spider trees, expanded in the Schur basis",
    long_about = "Computes chromatic symmetric functions of spider trees T(nu) in exact \
                  integer arithmetic, expands them in the Schur basis via symmetric-group \
                  character tables, and sweeps all candidates of a given hub degree for \
                  Schur positivity.\n\nAll results go to stdout as JSON; progress goes to \
                  stderr. Character tables are cached under $CSF_CACHE_DIR (default \
                  .csf-cache). Exit codes: 0 computed, 2 usage or parse error, 3 arithmetic \
                  overflow, 4 I/O failure."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the spider tree T(nu) as JSON
    Spider {
        /// Partition as comma-separated parts, descending (e.g. "6,2,1")
        #[arg(long)]
        nu: String,
    },
    /// Expand the chromatic symmetric function of T(nu) in the Schur basis
    Expand {
        /// Partition as comma-separated parts, descending
        #[arg(long)]
        nu: String,
        /// Character-table cache file (default: derived from CSF_CACHE_DIR)
        #[arg(long)]
        cache: Option<PathBuf>,
    },
    /// Sweep every candidate tree with hub degree n for Schur positivity
    Verify {
        /// Hub degree: candidates are the spiders T(nu) with nu a partition
        /// of n-1, trees on 2n vertices
        #[arg(long)]
        n: usize,
        /// Character-table cache file (default: derived from CSF_CACHE_DIR)
        #[arg(long)]
        cache: Option<PathBuf>,
        /// Also write the report document to this file
        #[arg(long)]
        out: Option<PathBuf>,
        /// Run hub degrees >= 11 despite the exponential subset enumeration
        #[arg(long)]
        force: bool,
    },
    /// Compute and persist the character table for one degree
    Chartable {
        /// Degree (at most 22)
        #[arg(long)]
        n: usize,
        /// Destination file for the table
        #[arg(long)]
        cache: PathBuf,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let rendered = match cli.command {
        Command::Spider { nu } => run_spider(&nu).map(|doc| render(&doc)),
        Command::Expand { nu, cache } => {
            run_expand(&nu, cache.as_deref()).map(|doc| render(&doc))
        }
        Command::Verify { n, cache, out, force } => {
            run_verify(n, cache.as_deref(), out.as_deref(), force).map(|doc| render(&doc))
        }
        Command::Chartable { n, cache } => run_chartable(n, &cache).map(|doc| render(&doc)),
    };
    match rendered {
        Ok(body) => {
            print!("{body}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
