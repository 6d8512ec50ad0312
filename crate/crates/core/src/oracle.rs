//! Brute-force reference solvers: one mex update per box of the diagram.
//!
//! These fill the whole table of subposition values from the bottom-right
//! corner back to the origin and are the ground truth the fast solvers are
//! checked against. They also serve as the linear-time baseline in benchmarks.

use std::fmt;

use thiserror::Error;

use crate::num::PartInt;
use crate::partition::Partition;
use crate::sg::{mex2, Outcome, SgValue};

/// Largest board (in boxes) the oracles accept.
pub const ORACLE_MAX_BOXES: u64 = 100_000_000;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OracleError {
    #[error("board has {boxes} boxes, over the oracle budget of {budget}")]
    BudgetExceeded { boxes: u64, budget: u64 },
    #[error("Downright is not defined on the empty board")]
    EmptyBoard,
}

/// Row lengths as indices, after the budget check.
pub(crate) fn row_lengths<T: PartInt>(p: &Partition<T>, budget: u64) -> Result<Vec<usize>, OracleError> {
    let boxes = p.size().unwrap_or(u64::MAX);
    if boxes > budget {
        return Err(OracleError::BudgetExceeded { boxes, budget });
    }
    Ok(p.parts().iter().map(|x| x.to_usize().unwrap()).collect())
}

/// Sprague-Grundy value of every subposition `λ[i, j]`, stored one row per part.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SgGrid<T: PartInt = u64> {
    partition: Partition<T>,
    rows: Vec<Vec<SgValue>>,
    cell_updates: u64,
}

impl<T: PartInt> SgGrid<T> {
    pub fn partition(&self) -> &Partition<T> {
        &self.partition
    }

    pub fn rows(&self) -> &[Vec<SgValue>] {
        &self.rows
    }

    /// Value at a box of the diagram, `None` outside it.
    pub fn get(&self, i: usize, j: usize) -> Option<SgValue> {
        self.rows.get(i).and_then(|row| row.get(j)).copied()
    }

    /// Value with positions outside the diagram read as the (terminal) empty board.
    pub fn value(&self, i: usize, j: usize) -> SgValue {
        self.get(i, j).unwrap_or(SgValue::ZERO)
    }

    /// Value of the whole board.
    pub fn origin(&self) -> SgValue {
        self.value(0, 0)
    }

    /// Number of mex evaluations performed; one per box.
    pub fn cell_updates(&self) -> u64 {
        self.cell_updates
    }
}

/// One line per row, digits separated by single spaces.
impl<T: PartInt> fmt::Display for SgGrid<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_rows(f, &self.rows, |v| v.digit())
    }
}

fn write_rows<V>(f: &mut fmt::Formatter<'_>, rows: &[Vec<V>], glyph: impl Fn(&V) -> char) -> fmt::Result {
    for (i, row) in rows.iter().enumerate() {
        if i > 0 {
            f.write_str("\n")?;
        }
        for (j, v) in row.iter().enumerate() {
            if j > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{}", glyph(v))?;
        }
    }
    Ok(())
}

/// LCTR values by the plain recursion: every nonempty subposition takes the
/// mex of its two children, and every move off the diagram reaches the
/// empty board (value 0).
pub fn oracle_sg_lctr<T: PartInt>(p: &Partition<T>) -> Result<SgGrid<T>, OracleError> {
    oracle_sg_lctr_with_budget(p, ORACLE_MAX_BOXES)
}

pub fn oracle_sg_lctr_with_budget<T: PartInt>(p: &Partition<T>, budget: u64) -> Result<SgGrid<T>, OracleError> {
    let lens = row_lengths(p, budget)?;
    let mut rows: Vec<Vec<SgValue>> = vec![Vec::new(); lens.len()];
    let mut updates = 0u64;
    for i in (0..lens.len()).rev() {
        let mut row = vec![SgValue::ZERO; lens[i]];
        let below = rows.get(i + 1);
        for j in (0..lens[i]).rev() {
            let down = below.and_then(|b| b.get(j)).copied().unwrap_or(SgValue::ZERO);
            let right = row.get(j + 1).copied().unwrap_or(SgValue::ZERO);
            row[j] = mex2(Some(down), Some(right));
            updates += 1;
        }
        rows[i] = row;
    }
    Ok(SgGrid { partition: p.clone(), rows, cell_updates: updates })
}

/// Downright values: corners are 0, a box with only one move takes the mex
/// of that single child, anything else the mex of both.
pub fn oracle_sg_downright<T: PartInt>(p: &Partition<T>) -> Result<SgGrid<T>, OracleError> {
    oracle_sg_downright_with_budget(p, ORACLE_MAX_BOXES)
}

pub fn oracle_sg_downright_with_budget<T: PartInt>(p: &Partition<T>, budget: u64) -> Result<SgGrid<T>, OracleError> {
    if p.is_empty() {
        return Err(OracleError::EmptyBoard);
    }
    let lens = row_lengths(p, budget)?;
    let mut rows: Vec<Vec<SgValue>> = vec![Vec::new(); lens.len()];
    let mut updates = 0u64;
    for i in (0..lens.len()).rev() {
        let mut row = vec![SgValue::ZERO; lens[i]];
        let below = rows.get(i + 1);
        for j in (0..lens[i]).rev() {
            let down = below.and_then(|b| b.get(j)).copied();
            let right = row.get(j + 1).copied();
            row[j] = mex2(down, right);
            updates += 1;
        }
        rows[i] = row;
    }
    Ok(SgGrid { partition: p.clone(), rows, cell_updates: updates })
}

/// Outcome class of every subposition under misère LCTR, plus the class of
/// the empty board.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PnGrid {
    rows: Vec<Vec<Outcome>>,
    empty: Outcome,
}

impl PnGrid {
    pub fn rows(&self) -> &[Vec<Outcome>] {
        &self.rows
    }

    pub fn get(&self, i: usize, j: usize) -> Option<Outcome> {
        self.rows.get(i).and_then(|row| row.get(j)).copied()
    }

    /// Class at `(i, j)`, with positions outside the diagram being the empty board.
    pub fn value(&self, i: usize, j: usize) -> Outcome {
        self.get(i, j).unwrap_or(self.empty)
    }

    pub fn empty(&self) -> Outcome {
        self.empty
    }

    pub fn origin(&self) -> Outcome {
        self.value(0, 0)
    }
}

impl fmt::Display for PnGrid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_rows(f, &self.rows, |o| if *o == Outcome::P { 'P' } else { 'N' })
    }
}

/// Misère LCTR by backward induction on outcome classes: the empty board is
/// terminal and therefore `N`; a box is `P` exactly when no move reaches a
/// `P`-position.
pub fn oracle_misere_pn<T: PartInt>(p: &Partition<T>) -> Result<PnGrid, OracleError> {
    let lens = row_lengths(p, ORACLE_MAX_BOXES)?;
    let empty = Outcome::N;
    let mut rows: Vec<Vec<Outcome>> = vec![Vec::new(); lens.len()];
    for i in (0..lens.len()).rev() {
        let mut row = vec![empty; lens[i]];
        let below = rows.get(i + 1);
        for j in (0..lens[i]).rev() {
            let down = below.and_then(|b| b.get(j)).copied().unwrap_or(empty);
            let right = row.get(j + 1).copied().unwrap_or(empty);
            row[j] = if down == Outcome::P || right == Outcome::P { Outcome::N } else { Outcome::P };
        }
        rows[i] = row;
    }
    Ok(PnGrid { rows, empty })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::{make_family, FamilySpec};

    fn p(parts: &[u64]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn lctr_small_boards() {
        let g = oracle_sg_lctr(&make_family::<u64>(FamilySpec::Gamma { r: 4, c: 4 }).unwrap()).unwrap();
        assert_eq!(g.origin(), SgValue::ZERO);
        let g = oracle_sg_lctr(&p(&[5])).unwrap();
        assert_eq!(g.origin(), SgValue::ONE);
        assert_eq!(g.to_string(), "1 2 1 2 1");
        let g = oracle_sg_lctr(&p(&[])).unwrap();
        assert_eq!(g.origin(), SgValue::ZERO);
        assert_eq!(g.cell_updates(), 0);
        assert_eq!(g.to_string(), "");
    }

    #[test]
    fn lctr_gamma_3_3_grid() {
        // hand computed from the recursion: column (1^2) below, row (2) to the right
        let g = oracle_sg_lctr(&p(&[3, 1, 1])).unwrap();
        assert_eq!(g.to_string(), "0 2 1\n2\n1");
    }

    #[test]
    fn downright_small_boards() {
        let g = oracle_sg_downright(&p(&[1])).unwrap();
        assert_eq!(g.to_string(), "0");
        let g = oracle_sg_downright(&p(&[6])).unwrap();
        assert_eq!(g.to_string(), "1 0 1 0 1 0");
        let g = oracle_sg_downright(&make_family::<u64>(FamilySpec::Staircase { r: 4 }).unwrap()).unwrap();
        assert_eq!(g.origin(), SgValue::ONE);
        assert_eq!(oracle_sg_downright(&p(&[])), Err(OracleError::EmptyBoard));
    }

    #[test]
    fn cell_updates_equal_boxes() {
        let q = p(&[8, 7, 6, 5, 5, 2, 1]);
        assert_eq!(oracle_sg_lctr(&q).unwrap().cell_updates(), 34);
        assert_eq!(oracle_sg_downright(&q).unwrap().cell_updates(), 34);
    }

    #[test]
    fn budget_is_enforced() {
        let q = p(&[10, 10]);
        assert_eq!(
            oracle_sg_lctr_with_budget(&q, 19),
            Err(OracleError::BudgetExceeded { boxes: 20, budget: 19 })
        );
        assert!(oracle_sg_lctr_with_budget(&q, 20).is_ok());
        assert!(matches!(
            oracle_sg_downright(&p(&[u64::MAX])),
            Err(OracleError::BudgetExceeded { .. })
        ));
    }

    #[test]
    fn misere_grid() {
        let g = oracle_misere_pn(&p(&[])).unwrap();
        assert_eq!(g.origin(), Outcome::N);
        let g = oracle_misere_pn(&p(&[1])).unwrap();
        assert_eq!(g.origin(), Outcome::P);
        let q = p(&[8, 7, 6, 5, 5, 2, 1]);
        let pn = oracle_misere_pn(&q).unwrap();
        let dr = oracle_sg_downright(&q).unwrap();
        for (i, row) in dr.rows().iter().enumerate() {
            for (j, v) in row.iter().enumerate() {
                assert_eq!(pn.get(i, j), Some(v.outcome()), "({i},{j})");
            }
        }
    }
}
