use std::net::SocketAddr;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use lctr_cli::bench::{run_bench_with, BENCH_CSV_HEADER, MAX_EXPONENT};
use lctr_cli::{cmd_census, cmd_grid, cmd_sg, CensusInput, CliError, Range};
use lctr_core::oracle::ORACLE_MAX_BOXES;
use lctr_core::Game;

/// Solvers for LCTR and Downright on Young diagrams.
///
/// Partitions are written as comma-separated parts with optional
/// exponents, e.g. "6,4^2,2,1^2". The empty string is the empty board.
#[derive(Parser)]
#[command(name = "lctr", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the Sprague-Grundy value (or P/N under misère play).
    Sg {
        #[arg(long, default_value = "lctr")]
        game: Game,
        partition: String,
    },
    /// Print the oracle value of every subposition, one line per row.
    Grid {
        #[arg(long, default_value = "lctr")]
        game: Game,
        partition: String,
    },
    /// Count nodes, leaves and distinct states of the game tree as CSV.
    Census {
        #[arg(long, default_value = "lctr")]
        game: Game,
        /// Board to count; omit when using --family.
        #[arg(required_unless_present = "family", conflicts_with = "family")]
        partition: Option<String>,
        /// staircase, rectangle or gamma
        #[arg(long)]
        family: Option<String>,
        /// Rows, as N or A-B.
        #[arg(long, default_value = "1-12", requires = "family")]
        r: Range,
        /// Columns, as N or A-B (ignored for staircases).
        #[arg(long, default_value = "1-12", requires = "family")]
        c: Range,
        /// Use the closed-form counts instead of path counting.
        #[arg(long, requires = "family")]
        closed_form: bool,
    },
    /// Time the fast solver and the oracle on staircases; CSV on stdout.
    Bench {
        #[arg(long, default_value_t = 20, value_parser = clap::value_parser!(u32).range(10..=MAX_EXPONENT as i64))]
        max_exponent: u32,
        #[arg(long, default_value_t = 5, value_parser = clap::value_parser!(u32).range(1..))]
        repetitions: u32,
    },
    /// Run the HTTP API. The PORT environment variable overrides the port.
    Serve {
        #[arg(long, default_value = "127.0.0.1:8080")]
        bind: SocketAddr,
    },
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Sg { game, partition } => println!("{}", cmd_sg(&partition, game)?),
        Command::Grid { game, partition } => {
            let grid = cmd_grid(&partition, game)?;
            if !grid.is_empty() {
                println!("{grid}");
            }
        }
        Command::Census { game, partition, family, r, c, closed_form } => {
            let input = match (partition, family) {
                (_, Some(kind)) => CensusInput::Family { kind, r, c },
                (Some(text), None) => CensusInput::Partition(text),
                (None, None) => unreachable!("clap requires one of them"),
            };
            println!("{}", cmd_census(&input, game, closed_form)?);
        }
        Command::Bench { max_exponent, repetitions } => {
            println!("{BENCH_CSV_HEADER}");
            run_bench_with(max_exponent, repetitions, ORACLE_MAX_BOXES, |rec| println!("{}", rec.csv_row()))
                .map_err(|e| CliError::Usage(e.to_string()))?;
        }
        Command::Serve { mut bind } => {
            if let Ok(port) = std::env::var("PORT") {
                let port = port.parse().map_err(|_| CliError::Usage(format!("PORT={port:?} is not a port number")))?;
                bind.set_port(port);
            }
            let rt = tokio::runtime::Runtime::new().map_err(|e| CliError::Other(e.to_string()))?;
            rt.block_on(lctr_cli::serve(bind)).map_err(|e| CliError::Other(e.to_string()))?;
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
