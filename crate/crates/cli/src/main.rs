use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use spcoad::report::{render, run, Command, OutputFormat, RunConfig};
use spcoad::roots_weyl::PositiveRule;

/// Exact computations on coadjoint orbits of Sp(2n, R).
#[derive(Parser, Debug)]
#[command(name = "spcoad", version)]
struct Cli {
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Subcommand, Debug)]
enum Cmd {
    /// Basis and structure of sp(2n).
    Algebra(Opts),
    /// Stabilizer, Kirillov form and flatness for a special functional.
    Orbit(Opts),
    /// Root decomposition, classification, half-sums and Weyl group.
    Roots(Opts),
    /// Parabolic polarization, Langlands pieces and maximal parabolic elements.
    Polarize(Opts),
    /// Run every invariant suite for all ranks up to --n.
    Verify(Opts),
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Positive {
    Lex,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(clap::Args, Debug)]
struct Opts {
    /// Rank n of sp(2n).
    #[arg(long, default_value_t = 2)]
    n: usize,
    /// Comma-separated positive distinct rationals p/q; r is their count.
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    lambdas: Vec<String>,
    #[arg(long, value_enum, default_value_t = Positive::Lex)]
    positive: Positive,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Random samples per check.
    #[arg(long, default_value_t = 20)]
    samples: usize,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Lift the default bounds on n.
    #[arg(long)]
    allow_large: bool,
}

fn config(cmd: Cmd) -> RunConfig {
    let (command, o) = match cmd {
        Cmd::Algebra(o) => (Command::Algebra, o),
        Cmd::Orbit(o) => (Command::Orbit, o),
        Cmd::Roots(o) => (Command::Roots, o),
        Cmd::Polarize(o) => (Command::Polarize, o),
        Cmd::Verify(o) => (Command::Verify, o),
    };
    RunConfig {
        command,
        n: o.n,
        lambdas: o
            .lambdas
            .into_iter()
            .filter(|s| !s.trim().is_empty())
            .collect(),
        positive: match o.positive {
            Positive::Lex => PositiveRule::Lexicographic,
        },
        seed: o.seed,
        samples: o.samples,
        format: match o.format {
            Format::Text => OutputFormat::Text,
            Format::Json => OutputFormat::Json,
        },
        allow_large: o.allow_large,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&config(cli.command)) {
        Ok(doc) => {
            print!("{}", render(&doc));
            ExitCode::from(doc.exit_code() as u8)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
