//! Subpositions `λ[i, j]` addressed by offsets into a base partition.
//!
//! A view never copies parts. Every read of a part goes through
//! [`SubpositionView::part_at`], which ticks a [`ProbeCounter`] so the
//! logarithmic solvers can be held to their probe budget.

use std::cell::Cell;

use crate::num::{from_usize, PartInt};
use crate::partition::Partition;

/// Counts part reads made during one solver invocation.
#[derive(Debug, Default)]
pub struct ProbeCounter {
    count: Cell<u64>,
}

impl ProbeCounter {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn get(&self) -> u64 {
        self.count.get()
    }

    pub fn reset(&self) {
        self.count.set(0);
    }

    #[inline]
    fn tick(&self) {
        self.count.set(self.count.get() + 1);
    }
}

/// `⌈log2(r + 1)⌉`
pub fn ceil_log2_plus_one(r: usize) -> u32 {
    let m = (r as u128) + 1;
    if m <= 1 {
        0
    } else {
        128 - (m - 1).leading_zeros()
    }
}

/// The subpartition of `base` left after deleting `row` top rows and `col`
/// left columns. Offsets past the diagram denote the empty partition.
#[derive(Clone, Copy, Debug)]
pub struct SubpositionView<'a, T: PartInt = u64> {
    base: &'a Partition<T>,
    row: usize,
    col: T,
}

impl<T: PartInt> PartialEq for SubpositionView<'_, T> {
    /// Same base (by identity or value) and same offsets.
    fn eq(&self, other: &Self) -> bool {
        (std::ptr::eq(self.base, other.base) || self.base == other.base)
            && self.row == other.row
            && self.col == other.col
    }
}

impl<'a, T: PartInt> SubpositionView<'a, T> {
    pub fn new(base: &'a Partition<T>, row: usize, col: T) -> Self {
        SubpositionView { base, row, col }
    }

    pub fn base(&self) -> &'a Partition<T> {
        self.base
    }

    pub fn row_offset(&self) -> usize {
        self.row
    }

    pub fn col_offset(&self) -> T {
        self.col
    }

    /// Composes offsets: `view(view(λ, i1, j1), i2, j2) = view(λ, i1 + i2, j1 + j2)`.
    pub fn subposition(&self, di: usize, dj: T) -> Self {
        SubpositionView {
            base: self.base,
            row: self.row.saturating_add(di),
            col: self.col.saturating_add(dj),
        }
    }

    /// Rows of the base at or below the row offset. An upper bound on the
    /// number of rows of the subpartition; reading it is not a probe.
    pub fn rows_bound(&self) -> usize {
        self.base.len().saturating_sub(self.row)
    }

    /// Length of row `k` of the subpartition (zero past the last row).
    #[inline]
    pub fn part_at(&self, k: usize, probes: &ProbeCounter) -> T {
        probes.tick();
        match self.row.checked_add(k).and_then(|idx| self.base.parts().get(idx)) {
            Some(&p) => p.saturating_sub(self.col),
            None => T::zero(),
        }
    }

    pub fn is_empty(&self, probes: &ProbeCounter) -> bool {
        self.part_at(0, probes).is_zero()
    }

    /// Length of column `col` of the subpartition: the number of rows whose
    /// length exceeds `col`.
    pub fn column_length(&self, col: T, probes: &ProbeCounter) -> usize {
        let Some(need) = col.checked_add(&T::one()) else {
            return 0;
        };
        last_true(self.rows_bound(), |l| self.part_at(l - 1, probes) >= need)
    }

    /// Durfee length: the largest `l` with `part_at(l - 1) >= l`.
    pub fn durfee(&self, probes: &ProbeCounter) -> usize {
        last_true(self.rows_bound(), |l| match from_usize::<T>(l) {
            Some(lt) => self.part_at(l - 1, probes) >= lt,
            None => false,
        })
    }

    /// Copies the subpartition out as an owned partition.
    pub fn materialize(&self) -> Partition<T> {
        let rows = self.base.parts().get(self.row..).unwrap_or(&[]);
        let parts: Vec<T> = rows.iter().take_while(|&&p| p > self.col).map(|&p| p - self.col).collect();
        Partition::from_sorted_unchecked(parts)
    }
}

/// Largest `l` in `1..=len` with `pred(l)`, given that `pred` holds on a
/// prefix of that range; zero when it holds nowhere. Evaluates `pred`
/// `⌈log2(len + 1)⌉` times at most.
pub(crate) fn last_true(len: usize, mut pred: impl FnMut(usize) -> bool) -> usize {
    let (mut lo, mut hi) = (0usize, len + 1);
    while hi - lo > 1 {
        let mid = lo + (hi - lo) / 2;
        if pred(mid) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    lo
}
