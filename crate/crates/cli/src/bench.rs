//! Fast solver against the grid oracle on staircases `r = 2^10 .. 2^max`.
//!
//! Boards use 32-bit parts to keep the largest staircases small in memory.
//! Only the solver call is timed; building the board is not.

use std::fmt;
use std::time::{Duration, Instant};

use lctr_core::oracle::oracle_sg_lctr_with_budget;
use lctr_core::{make_family, sg_lctr, FamilySpec, Partition32, ProbeCounter};
use thiserror::Error;

pub const BENCH_CSV_HEADER: &str = "algorithm,r,n,wall_time_ns,probes_or_cells";
pub const MIN_EXPONENT: u32 = 10;
pub const MAX_EXPONENT: u32 = 26;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Algorithm {
    Fast,
    Oracle,
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Algorithm::Fast => "fast",
            Algorithm::Oracle => "oracle",
        })
    }
}

/// One row of benchmark output. `wall_time` is the median over repetitions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BenchRecord {
    pub algorithm: Algorithm,
    pub r: u64,
    pub n: u64,
    pub wall_time: Duration,
    pub probes_or_cells: u64,
}

impl BenchRecord {
    pub fn csv_row(&self) -> String {
        format!(
            "{},{},{},{},{}",
            self.algorithm,
            self.r,
            self.n,
            self.wall_time.as_nanos(),
            self.probes_or_cells
        )
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum BenchError {
    #[error("max exponent {0} outside {MIN_EXPONENT}..={MAX_EXPONENT}")]
    Exponent(u32),
    #[error("repetitions must be at least 1")]
    Repetitions,
}

fn median(mut times: Vec<Duration>) -> Duration {
    times.sort_unstable();
    times[times.len() / 2]
}

/// Runs both solvers on each staircase; the oracle only while the board fits
/// in `oracle_budget` boxes.
pub fn run_bench(max_exponent: u32, repetitions: u32, oracle_budget: u64) -> Result<Vec<BenchRecord>, BenchError> {
    run_bench_with(max_exponent, repetitions, oracle_budget, |_| {})
}

/// Like [`run_bench`], handing each record to `sink` as soon as it is measured.
pub fn run_bench_with(
    max_exponent: u32,
    repetitions: u32,
    oracle_budget: u64,
    mut sink: impl FnMut(&BenchRecord),
) -> Result<Vec<BenchRecord>, BenchError> {
    if !(MIN_EXPONENT..=MAX_EXPONENT).contains(&max_exponent) {
        return Err(BenchError::Exponent(max_exponent));
    }
    if repetitions == 0 {
        return Err(BenchError::Repetitions);
    }
    let mut out = Vec::new();
    for k in MIN_EXPONENT..=max_exponent {
        let r = 1u64 << k;
        let board: Partition32 = make_family(FamilySpec::Staircase { r }).expect("staircase fits in u32 parts");
        let n = r * (r + 1) / 2;

        let mut times = Vec::new();
        let mut probes = 0;
        for _ in 0..repetitions {
            let counter = ProbeCounter::new();
            let start = Instant::now();
            std::hint::black_box(sg_lctr(board.view(), &counter));
            times.push(start.elapsed());
            probes = counter.get();
        }
        let rec = BenchRecord { algorithm: Algorithm::Fast, r, n, wall_time: median(times), probes_or_cells: probes };
        sink(&rec);
        out.push(rec);

        if n <= oracle_budget {
            let mut times = Vec::new();
            let mut cells = 0;
            for _ in 0..repetitions {
                let start = Instant::now();
                let grid = oracle_sg_lctr_with_budget(&board, oracle_budget).expect("within budget");
                times.push(start.elapsed());
                cells = grid.cell_updates();
            }
            let rec =
                BenchRecord { algorithm: Algorithm::Oracle, r, n, wall_time: median(times), probes_or_cells: cells };
            sink(&rec);
            out.push(rec);
        }
    }
    Ok(out)
}
