mod commands;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use binedge::harness::Suite;

/// Labelings, decompositions, Knutson families and F-purity for binomial
/// edge ideals.
#[derive(Debug, Parser)]
#[command(name = "binedge", version)]
pub struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    Closed,
    WeaklyClosed,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum LabelingChoice {
    /// The labels of the file.
    Identity,
    /// The first closed labeling.
    Closed,
    /// The first weakly closed labeling.
    WeaklyClosed,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Search for a closed or weakly closed labeling.
    Recognize {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long, value_enum, default_value = "weakly-closed")]
        mode: Mode,
    },
    /// Minimal primes of the binomial edge ideal and their intersection.
    Decompose {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long, value_enum, default_value = "identity")]
        labeling: LabelingChoice,
    },
    /// Run an exhaustive verification suite.
    Verify {
        #[arg(value_parser = parse_suite)]
        suite: Suite,
        #[arg(long)]
        nmax: usize,
        /// Seed for the sampled parts of a suite.
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Explore the family generated by f and the adjacent-column seeds.
    Knutson {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 3)]
        depth: usize,
        #[arg(long, default_value_t = 5000)]
        max_ideals: usize,
        /// Start from (f) alone.
        #[arg(long)]
        no_seed_axiom: bool,
        /// Replay every derivation and check each entry against its minimal primes.
        #[arg(long)]
        check: bool,
    },
    /// Fedder test for the ideal of a graph over F_p.
    Fpure {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        p: u32,
        /// Rows of the generic matrix.
        #[arg(long, default_value_t = 2)]
        rows: usize,
        /// Lift the default size limits.
        #[arg(long)]
        unbounded: bool,
    },
    /// Build a membership certificate for the ideal of a graph.
    Certify {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long, default_value_t = 2)]
        rows: usize,
    },
    /// Re-verify a certificate written by `certify --json`.
    Replay {
        #[arg(long)]
        certificate: PathBuf,
    },
}

fn parse_suite(s: &str) -> Result<Suite, String> {
    s.parse().map_err(|_| {
        let names: Vec<&str> = Suite::ALL.iter().map(|t| t.name()).collect();
        format!("expected one of {}", names.join(", "))
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::run(&cli.command, cli.json) {
        Ok(out) => {
            print!("{}", out.text);
            ExitCode::from(out.code)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
