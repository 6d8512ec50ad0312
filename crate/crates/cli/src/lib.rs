//! Command line tools, benchmark harness and HTTP play service built on
//! [`lctr_core`].

pub mod bench;
pub mod commands;
pub mod service;

pub use bench::{run_bench, Algorithm, BenchError, BenchRecord, BENCH_CSV_HEADER};
pub use commands::{cmd_census, cmd_grid, cmd_sg, CensusInput, CliError, Range};
pub use service::{router, serve, AppState};
