//! Exact game-tree census: node, leaf and distinct-state counts.
//!
//! A subposition `λ[i, j]` occurs in the unfolded game tree once per move
//! sequence reaching it, so node and leaf counts come from a forward
//! path-count table over the diagram rather than from unfolding the tree.

use std::collections::HashSet;
use std::fmt;

use num_bigint::BigUint;
use num_integer::binomial;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::num::PartInt;
use crate::oracle::{row_lengths, OracleError};
use crate::partition::{FamilySpec, Partition, PartitionError};
use crate::sg::Rules;

/// Largest board (in boxes) [`census`] accepts. Distinct states are counted
/// by hashing materialized subpartitions, which costs `O(n * rows)`.
pub const CENSUS_MAX_BOXES: u64 = 200_000;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AnalyticsError {
    #[error("Downright is not defined on the empty board")]
    EmptyBoard,
    #[error("board has {boxes} boxes, over the census budget of {budget}")]
    BudgetExceeded { boxes: u64, budget: u64 },
    #[error(transparent)]
    Family(#[from] PartitionError),
}

impl From<OracleError> for AnalyticsError {
    fn from(e: OracleError) -> Self {
        match e {
            OracleError::EmptyBoard => AnalyticsError::EmptyBoard,
            OracleError::BudgetExceeded { boxes, budget } => AnalyticsError::BudgetExceeded { boxes, budget },
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TreeCensus {
    pub nodes: BigUint,
    pub leaves: BigUint,
    pub states: u64,
}

/// Header line of the census CSV.
pub const CENSUS_CSV_HEADER: &str = "family,game,r,c,nodes,leaves,states";

impl TreeCensus {
    /// One CSV record: `family,game,r,c,nodes,leaves,states`.
    pub fn csv_row(&self, family: &str, rules: Rules, r: u64, c: u64) -> String {
        format!("{family},{},{r},{c},{},{},{}", rules.name(), self.nodes, self.leaves, self.states)
    }
}

impl fmt::Display for TreeCensus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "nodes={} leaves={} states={}", self.nodes, self.leaves, self.states)
    }
}

/// Counts the game tree of `p` under `rules`.
pub fn census<T: PartInt>(rules: Rules, p: &Partition<T>) -> Result<TreeCensus, AnalyticsError> {
    if rules == Rules::Downright && p.is_empty() {
        return Err(AnalyticsError::EmptyBoard);
    }
    let lens = row_lengths(p, CENSUS_MAX_BOXES)?;

    let mut nodes = BigUint::zero();
    let mut into_empty = BigUint::zero();
    let mut corners = BigUint::zero();
    let mut prev: Vec<BigUint> = Vec::new();
    for (i, &len) in lens.iter().enumerate() {
        let next_len = lens.get(i + 1).copied().unwrap_or(0);
        let mut row: Vec<BigUint> = Vec::with_capacity(len);
        for j in 0..len {
            // both games allow the moves down into (i, j) and right into (i, j)
            let mut paths = if i == 0 && j == 0 { BigUint::one() } else { BigUint::zero() };
            if let Some(above) = prev.get(j) {
                paths += above;
            }
            if j > 0 {
                paths += &row[j - 1];
            }
            let down_off = j >= next_len;
            let right_off = j + 1 >= len;
            match rules {
                Rules::Lctr => {
                    // moves leaving the diagram reach the empty board
                    if down_off {
                        into_empty += &paths;
                    }
                    if right_off {
                        into_empty += &paths;
                    }
                }
                Rules::Downright => {
                    if down_off && right_off {
                        corners += &paths;
                    }
                }
            }
            nodes += &paths;
            row.push(paths);
        }
        prev = row;
    }

    let mut states = distinct_subpartitions(p, &lens);
    let (nodes, leaves) = match rules {
        Rules::Lctr => {
            states += 1;
            if lens.is_empty() {
                // the lone empty board is both root and leaf
                (BigUint::one(), BigUint::one())
            } else {
                (nodes + &into_empty, into_empty)
            }
        }
        Rules::Downright => (nodes, corners),
    };
    Ok(TreeCensus { nodes, leaves, states })
}

fn distinct_subpartitions<T: PartInt>(p: &Partition<T>, lens: &[usize]) -> u64 {
    let mut seen: HashSet<Vec<T>> = HashSet::new();
    for (i, &len) in lens.iter().enumerate() {
        for j in 0..len {
            let col = T::from(j).unwrap();
            seen.insert(p.at(i, col).materialize().into_parts());
        }
    }
    seen.len() as u64
}

fn big(x: u64) -> BigUint {
    BigUint::from(x)
}

fn choose(n: u64, k: u64) -> BigUint {
    binomial(big(n), big(k))
}

/// Census of a named family from its closed-form counts.
pub fn census_closed_form(rules: Rules, spec: FamilySpec) -> Result<TreeCensus, AnalyticsError> {
    spec.validate()?;
    let two = || big(2);
    let census = match (spec, rules) {
        (FamilySpec::Gamma { r, c }, Rules::Lctr) => TreeCensus {
            states: if r.min(c) == 1 { r + c } else { r + c - 1 },
            nodes: big(2 * r + 2 * c - 1),
            leaves: big(r + c),
        },
        (FamilySpec::Gamma { r, c }, Rules::Downright) => {
            let thin = r.min(c) == 1;
            TreeCensus {
                states: if thin { r + c - 1 } else { r + c - 2 },
                nodes: big(r + c - 1),
                leaves: big(if thin { 1 } else { 2 }),
            }
        }
        (FamilySpec::Staircase { r }, Rules::Lctr) => TreeCensus {
            states: r + 1,
            nodes: two().pow(r as u32 + 1) - 1u32,
            leaves: two().pow(r as u32),
        },
        (FamilySpec::Staircase { r }, Rules::Downright) => TreeCensus {
            states: r,
            nodes: two().pow(r as u32) - 1u32,
            leaves: two().pow(r as u32 - 1),
        },
        (FamilySpec::Rectangle { r, c }, Rules::Lctr) => TreeCensus {
            states: r * c + 1,
            nodes: choose(r + c, r) * 2u32 - 1u32,
            leaves: choose(r + c, r),
        },
        (FamilySpec::Rectangle { r, c }, Rules::Downright) => TreeCensus {
            states: r * c,
            nodes: choose(r + c, r) - 1u32,
            leaves: choose(r + c - 2, r - 1),
        },
    };
    Ok(census)
}

/// Bounds on the number of distinct states over all boards with `n` boxes.
///
/// The upper bound is one state per box (plus the empty board for LCTR).
/// The lower bound is the state count of the largest staircase that fits in
/// `n` boxes: a longest play visits pairwise distinct positions, and a board
/// whose longest play is short holds at most a staircase's worth of boxes.
pub fn state_space_bounds(rules: Rules, n: u64) -> (u64, u64) {
    let r = staircase_rows(n);
    match rules {
        Rules::Lctr => (r + 1, n + 1),
        Rules::Downright => (r, n),
    }
}

/// Largest `r` with `r (r + 1) / 2 <= n`, i.e. `floor(sqrt(1/4 + 2n) - 1/2)`.
fn staircase_rows(n: u64) -> u64 {
    let disc = 8 * (n as u128) + 1;
    let root = num_integer::Roots::sqrt(&disc);
    ((root - 1) / 2) as u64
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::make_family;

    fn p(parts: &[u64]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn fam(spec: FamilySpec) -> Partition {
        make_family(spec).unwrap()
    }

    #[test]
    fn rectangle_two_by_three() {
        let q = fam(FamilySpec::Rectangle { r: 2, c: 3 });
        let d = census(Rules::Downright, &q).unwrap();
        assert_eq!(d.nodes, big(9));
        assert_eq!(d.leaves, big(3));
        assert_eq!(d.states, 6);
        let l = census(Rules::Lctr, &q).unwrap();
        assert_eq!(l.leaves, big(10));
        assert_eq!(d.csv_row("rectangle", Rules::Downright, 2, 3), "rectangle,downright,2,3,9,3,6");
    }

    #[test]
    fn single_row_leaves() {
        let l = census(Rules::Lctr, &p(&[5])).unwrap();
        assert_eq!(l.leaves, big(6));
        assert_eq!(l.nodes, big(11));
        assert_eq!(l.states, 6);
    }

    #[test]
    fn staircase_three() {
        let l = census(Rules::Lctr, &fam(FamilySpec::Staircase { r: 3 })).unwrap();
        assert_eq!((l.nodes, l.leaves, l.states), (big(15), big(8), 4));
    }

    #[test]
    fn gamma_states() {
        let l = census(Rules::Lctr, &fam(FamilySpec::Gamma { r: 3, c: 4 })).unwrap();
        assert_eq!(l.states, 6);
    }

    #[test]
    fn empty_board() {
        let l = census(Rules::Lctr, &p(&[])).unwrap();
        assert_eq!((l.nodes, l.leaves, l.states), (big(1), big(1), 1));
        assert_eq!(census(Rules::Downright, &p(&[])), Err(AnalyticsError::EmptyBoard));
    }

    #[test]
    fn budget() {
        assert!(matches!(
            census(Rules::Lctr, &p(&[200_001])),
            Err(AnalyticsError::BudgetExceeded { .. })
        ));
    }

    #[test]
    fn closed_form_examples() {
        let d = census_closed_form(Rules::Downright, FamilySpec::Staircase { r: 6 }).unwrap();
        assert_eq!(d.nodes, big(63));
        let l = census_closed_form(Rules::Lctr, FamilySpec::Gamma { r: 4, c: 1 }).unwrap();
        assert_eq!(l.nodes, big(9));
        let d = census_closed_form(Rules::Downright, FamilySpec::Rectangle { r: 4, c: 4 }).unwrap();
        assert_eq!(d.leaves, big(20));
        assert!(matches!(
            census_closed_form(Rules::Lctr, FamilySpec::Gamma { r: 0, c: 1 }),
            Err(AnalyticsError::Family(PartitionError::InvalidFamilyParam(_)))
        ));
    }

    #[test]
    fn bounds() {
        assert_eq!(state_space_bounds(Rules::Lctr, 10).1, 11);
        assert_eq!(state_space_bounds(Rules::Downright, 10).1, 10);
        assert_eq!(state_space_bounds(Rules::Downright, 6).0, 3);
        assert_eq!(state_space_bounds(Rules::Lctr, 6).0, 4);
        for n in 0..2000u64 {
            let r = staircase_rows(n);
            assert!(r * (r + 1) / 2 <= n && (r + 1) * (r + 2) / 2 > n, "n={n}");
        }
    }
}
