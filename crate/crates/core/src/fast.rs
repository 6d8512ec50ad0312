//! Logarithmic-time Sprague-Grundy evaluation.
//!
//! Both games collapse onto a small subgame near the end of the main
//! diagonal. Downright values are constant along the diagonal, so the value
//! of the board equals the value of the gamma-shaped subgame at
//! `(d - 1, d - 1)`. LCTR values propagate only conditionally; the subgame at
//! `(d - 3, d - 3)` has Durfee length three and is resolved from six
//! boundary values with closed forms for games of at most three rows.
//!
//! Everything is read through [`SubpositionView::part_at`], so the work is a
//! handful of binary searches plus constant arithmetic.

use num_traits::{PrimInt, Unsigned};
use thiserror::Error;

use crate::num::{is_odd, minus, PartInt};
use crate::sg::{mex, Game, Outcome, Rules, SgValue};
use crate::view::{ProbeCounter, SubpositionView};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SolveError {
    #[error("invalid shape: {0}")]
    InvalidShape(String),
    #[error("Downright is not defined on the empty board")]
    EmptyBoard,
    #[error("misère LCTR has outcome classes only, not Sprague-Grundy values")]
    NoSgUnderMisere,
}

const ZERO: SgValue = SgValue::ZERO;
const ONE: SgValue = SgValue::ONE;
const TWO: SgValue = SgValue::TWO;

/// LCTR on a single row of `c` boxes (equivalently a single column).
pub fn sg_one_row<N: PrimInt + Unsigned>(c: N) -> SgValue {
    if c.is_zero() {
        ZERO
    } else if is_odd(c) {
        ONE
    } else {
        TWO
    }
}

/// LCTR on two rows `l1 >= l2 >= 1`.
pub fn sg_two_row<N: PrimInt + Unsigned>(l1: N, l2: N) -> Result<SgValue, SolveError> {
    if l2.is_zero() || l1 < l2 {
        return Err(SolveError::InvalidShape(format!(
            "two rows need l1 >= l2 >= 1, got ({:?}, {:?})",
            l1.to_u64(),
            l2.to_u64()
        )));
    }
    Ok(two_row(l1, l2))
}

fn two_row<N: PrimInt + Unsigned>(l1: N, l2: N) -> SgValue {
    match (l1 == l2, is_odd(l2)) {
        (true, false) => ZERO,
        (true, true) => TWO,
        (false, true) => ZERO,
        (false, false) => ONE,
    }
}

/// LCTR on three rows `l1 >= l2 >= l3 >= 1`.
pub fn sg_three_row<N: PrimInt + Unsigned>(l1: N, l2: N, l3: N) -> Result<SgValue, SolveError> {
    if l3.is_zero() || l2 < l3 || l1 < l2 {
        return Err(SolveError::InvalidShape(format!(
            "three rows need l1 >= l2 >= l3 >= 1, got ({:?}, {:?}, {:?})",
            l1.to_u64(),
            l2.to_u64(),
            l3.to_u64()
        )));
    }
    Ok(three_row(l1, l2, l3))
}

fn three_row<N: PrimInt + Unsigned>(l1: N, l2: N, l3: N) -> SgValue {
    let one = N::one();
    let two = one + one;
    let odd3 = is_odd(l3);
    if l1 == l2 && l2 == l3 {
        if l3 == two {
            TWO
        } else if l3 == one || !odd3 {
            ONE
        } else {
            ZERO
        }
    } else if l2 == l3 {
        if odd3 { ZERO } else { ONE }
    } else if l1 == l2 {
        if odd3 { ONE } else { ZERO }
    } else if l3 == one {
        if is_odd(l2) { TWO } else { ONE }
    } else if odd3 {
        ONE
    } else {
        ZERO
    }
}

/// LCTR on at most three rows given as a non-increasing list that may carry
/// trailing zeros.
fn sg_small<N: PrimInt + Unsigned>(rows: &[N]) -> SgValue {
    let len = rows.iter().rposition(|x| !x.is_zero()).map_or(0, |k| k + 1);
    match len {
        0 => ZERO,
        1 => sg_one_row(rows[0]),
        2 => two_row(rows[0], rows[1]),
        3 => three_row(rows[0], rows[1], rows[2]),
        _ => unreachable!("at most three rows"),
    }
}

/// Gamma board `(c, 1^(r-1))` under either rule set; `r, c >= 1`.
pub fn sg_gamma<N: PrimInt + Unsigned>(rules: Rules, r: N, c: N) -> SgValue {
    debug_assert!(!r.is_zero() && !c.is_zero(), "gamma needs r, c >= 1");
    let one = N::one();
    match rules {
        Rules::Lctr => {
            if c > one && r > one {
                ZERO
            } else if (r == one && is_odd(c)) || (c == one && is_odd(r)) {
                ONE
            } else {
                TWO
            }
        }
        Rules::Downright => {
            let (rodd, codd) = (is_odd(r), is_odd(c));
            if rodd && codd {
                ZERO
            } else if rodd != codd && c > one && r > one {
                TWO
            } else {
                ONE
            }
        }
    }
}

/// LCTR on the rectangle with `r` rows of `c` boxes; `r, c >= 1`.
pub fn sg_rectangle<N: PrimInt + Unsigned>(r: N, c: N) -> SgValue {
    debug_assert!(!r.is_zero() && !c.is_zero(), "rectangle needs r, c >= 1");
    let one = N::one();
    let two = one + one;
    let sum_even = is_odd(r) == is_odd(c);
    if c > one && r > one && sum_even {
        ZERO
    } else if (c <= two || r <= two) && !sum_even {
        TWO
    } else {
        ONE
    }
}

/// Downright value of a nonempty subposition.
pub fn sg_downright<T: PartInt>(view: SubpositionView<'_, T>, probes: &ProbeCounter) -> Result<SgValue, SolveError> {
    let d = view.durfee(probes);
    if d == 0 {
        return Err(SolveError::EmptyBoard);
    }
    // the last diagonal subgame is a gamma board
    let shift = T::from(d - 1).expect("durfee length fits the part type");
    let corner = view.subposition(d - 1, shift);
    let c = corner.part_at(0, probes);
    let r = corner.column_length(T::zero(), probes);
    Ok(gamma_mixed(Rules::Downright, r, c))
}

/// LCTR (normal play) value of a subposition; the empty board has value 0.
pub fn sg_lctr<T: PartInt>(view: SubpositionView<'_, T>, probes: &ProbeCounter) -> SgValue {
    let d = view.durfee(probes);
    match d {
        0 => ZERO,
        1 => {
            let c = view.part_at(0, probes);
            let r = view.column_length(T::zero(), probes);
            gamma_mixed(Rules::Lctr, r, c)
        }
        2 => durfee_two(view, probes),
        _ => {
            let shift = d - 3;
            let s = T::from(shift).expect("durfee length fits the part type");
            durfee_three(view.subposition(shift, s), probes)
        }
    }
}

/// Gamma value for a row count and a part of a possibly different width.
fn gamma_mixed<T: PartInt>(rules: Rules, r: usize, c: T) -> SgValue {
    sg_gamma(rules, r as u128, c.to_u128().expect("part fits in u128"))
}

/// Board with Durfee length two, from the values at `(2,0), (2,1), (0,2), (1,2)`.
fn durfee_two<T: PartInt>(view: SubpositionView<'_, T>, probes: &ProbeCounter) -> SgValue {
    let l1 = view.part_at(0, probes);
    let l2 = view.part_at(1, probes);
    let one = T::one();
    let rows = view.column_length(T::zero(), probes);
    let second = view.column_length(one, probes);

    // the rows below the square, transposed: <rows - 2, second - 2>
    let a20 = sg_small(&[minus(rows, 2), minus(second, 2)]);
    let a21 = sg_one_row(minus(second, 2));
    let a02 = sg_small(&[minus(l1, 2), minus(l2, 2)]);
    let a12 = sg_one_row(minus(l2, 2));

    let a11 = mex(a21, a12);
    let a01 = mex(a02, a11);
    let a10 = mex(a20, a11);
    mex(a01, a10)
}

/// Board with Durfee length exactly three, from the six boundary values on
/// row 3 and column 3.
fn durfee_three<T: PartInt>(view: SubpositionView<'_, T>, probes: &ProbeCounter) -> SgValue {
    let l1 = view.part_at(0, probes);
    let l2 = view.part_at(1, probes);
    let l3 = view.part_at(2, probes);
    let one = T::one();
    let c1 = view.column_length(T::zero(), probes);
    let c2 = view.column_length(one, probes);
    let c3 = view.column_length(one + one, probes);

    let a03 = sg_small(&[minus(l1, 3), minus(l2, 3), minus(l3, 3)]);
    let a13 = sg_small(&[minus(l2, 3), minus(l3, 3)]);
    let a23 = sg_one_row(minus(l3, 3));
    let a30 = sg_small(&[minus(c1, 3), minus(c2, 3), minus(c3, 3)]);
    let a31 = sg_small(&[minus(c2, 3), minus(c3, 3)]);
    let a32 = sg_one_row(minus(c3, 3));

    let a22 = mex(a23, a32);
    let a21 = mex(a22, a31);
    let a20 = mex(a21, a30);
    let a12 = mex(a13, a22);
    let a11 = mex(a12, a21);
    let a10 = mex(a11, a20);
    let a02 = mex(a03, a12);
    let a01 = mex(a02, a11);
    mex(a01, a10)
}

/// Sprague-Grundy value under a normal-play configuration.
pub fn sg<T: PartInt>(game: Game, view: SubpositionView<'_, T>, probes: &ProbeCounter) -> Result<SgValue, SolveError> {
    match game {
        Game::LctrNormal => Ok(sg_lctr(view, probes)),
        Game::DownrightNormal => sg_downright(view, probes),
        Game::LctrMisere => Err(SolveError::NoSgUnderMisere),
    }
}

/// Outcome class of a subposition. Misère LCTR on a nonempty board has the
/// same classes as Downright; its empty board is an `N`-position.
pub fn outcome<T: PartInt>(game: Game, view: SubpositionView<'_, T>, probes: &ProbeCounter) -> Result<Outcome, SolveError> {
    match game {
        Game::LctrNormal => Ok(sg_lctr(view, probes).outcome()),
        Game::DownrightNormal => Ok(sg_downright(view, probes)?.outcome()),
        Game::LctrMisere => match sg_downright(view, probes) {
            Ok(v) => Ok(v.outcome()),
            Err(SolveError::EmptyBoard) => Ok(Outcome::N),
            Err(e) => Err(e),
        },
    }
}
