//! The `sg`, `grid` and `census` commands as functions returning their output.

use std::fmt;
use std::str::FromStr;

use lctr_core::analytics::CENSUS_CSV_HEADER;
use lctr_core::{
    census, census_closed_form, oracle_misere_pn, oracle_sg_downright, oracle_sg_lctr, outcome, sg, AnalyticsError,
    FamilySpec, Game, OracleError, Partition, PartitionError, ProbeCounter, Rules, SolveError,
};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("cannot parse partition: {0}")]
    Partition(#[from] PartitionError),
    #[error("{0}")]
    Usage(String),
    #[error("Downright is not defined on the empty board")]
    EmptyBoard,
    #[error("board has {boxes} boxes, over the budget of {budget}")]
    BudgetExceeded { boxes: u64, budget: u64 },
    #[error("{0}")]
    Other(String),
}

impl CliError {
    /// Process exit status for this error.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Partition(_) | CliError::Usage(_) => 2,
            CliError::EmptyBoard => 3,
            CliError::BudgetExceeded { .. } => 4,
            CliError::Other(_) => 1,
        }
    }
}

impl From<SolveError> for CliError {
    fn from(e: SolveError) -> Self {
        match e {
            SolveError::EmptyBoard => CliError::EmptyBoard,
            other => CliError::Other(other.to_string()),
        }
    }
}

impl From<OracleError> for CliError {
    fn from(e: OracleError) -> Self {
        match e {
            OracleError::EmptyBoard => CliError::EmptyBoard,
            OracleError::BudgetExceeded { boxes, budget } => CliError::BudgetExceeded { boxes, budget },
        }
    }
}

impl From<AnalyticsError> for CliError {
    fn from(e: AnalyticsError) -> Self {
        match e {
            AnalyticsError::EmptyBoard => CliError::EmptyBoard,
            AnalyticsError::BudgetExceeded { boxes, budget } => CliError::BudgetExceeded { boxes, budget },
            AnalyticsError::Family(e) => CliError::Partition(e),
        }
    }
}

/// SG value of a board as a digit, or its outcome class under misère play.
pub fn cmd_sg(text: &str, game: Game) -> Result<String, CliError> {
    let p: Partition = text.parse()?;
    let probes = ProbeCounter::new();
    Ok(match game {
        Game::LctrMisere => outcome(game, p.view(), &probes)?.to_string(),
        _ => sg(game, p.view(), &probes)?.to_string(),
    })
}

/// Oracle values of every subposition, one line per row.
pub fn cmd_grid(text: &str, game: Game) -> Result<String, CliError> {
    let p: Partition = text.parse()?;
    Ok(match game {
        Game::LctrNormal => oracle_sg_lctr(&p)?.to_string(),
        Game::DownrightNormal => oracle_sg_downright(&p)?.to_string(),
        Game::LctrMisere => oracle_misere_pn(&p)?.to_string(),
    })
}

/// Inclusive integer range written `a` or `a-b`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Range {
    pub lo: u64,
    pub hi: u64,
}

impl FromStr for Range {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let num = |t: &str| t.trim().parse::<u64>().map_err(|_| format!("bad range {s:?}, expected N or A-B"));
        let (lo, hi) = match s.split_once('-') {
            Some((a, b)) => (num(a)?, num(b)?),
            None => {
                let v = num(s)?;
                (v, v)
            }
        };
        if lo > hi {
            return Err(format!("empty range {s:?}"));
        }
        Ok(Range { lo, hi })
    }
}

impl fmt::Display for Range {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.lo, self.hi)
    }
}

pub enum CensusInput {
    Partition(String),
    Family { kind: String, r: Range, c: Range },
}

/// Census CSV (with header) for one board or a family over parameter ranges.
pub fn cmd_census(input: &CensusInput, game: Game, closed_form: bool) -> Result<String, CliError> {
    let rules = match game {
        Game::LctrNormal => Rules::Lctr,
        Game::DownrightNormal => Rules::Downright,
        Game::LctrMisere => return Err(CliError::Usage("census covers lctr and downright only".into())),
    };
    let mut out = vec![CENSUS_CSV_HEADER.to_string()];
    match input {
        CensusInput::Partition(text) => {
            if closed_form {
                return Err(CliError::Usage("--closed-form needs --family".into()));
            }
            let p: Partition = text.parse()?;
            let c = census(rules, &p)?;
            out.push(c.csv_row("partition", rules, p.len() as u64, p.first()));
        }
        CensusInput::Family { kind, r, c } => {
            for spec in family_specs(kind, *r, *c)? {
                let row = if closed_form {
                    census_closed_form(rules, spec)?
                } else {
                    census(rules, &Partition::<u64>::family(spec)?)?
                };
                out.push(row.csv_row(spec.name(), rules, spec.rows(), spec.cols()));
            }
        }
    }
    Ok(out.join("\n"))
}

fn family_specs(kind: &str, r: Range, c: Range) -> Result<Vec<FamilySpec>, CliError> {
    let mut specs = Vec::new();
    for r in r.lo..=r.hi {
        match kind {
            "staircase" => specs.push(FamilySpec::Staircase { r }),
            "rectangle" => specs.extend((c.lo..=c.hi).map(|c| FamilySpec::Rectangle { r, c })),
            "gamma" => specs.extend((c.lo..=c.hi).map(|c| FamilySpec::Gamma { r, c })),
            other => {
                return Err(CliError::Usage(format!(
                    "unknown family {other:?} (expected staircase, rectangle or gamma)"
                )))
            }
        }
    }
    for spec in &specs {
        spec.validate()?;
    }
    Ok(specs)
}
