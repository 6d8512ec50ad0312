//! Integer bounds shared by the partition type and the closed-form solvers.

use std::fmt::{Debug, Display};
use std::hash::Hash;

use num_traits::{PrimInt, Unsigned};

/// Unsigned primitive integer usable as a part (row length) of a partition.
///
/// Implemented for every unsigned primitive; `u64` is the default and `u32`
/// halves the memory of very tall boards.
pub trait PartInt: PrimInt + Unsigned + Hash + Debug + Display + Default + Send + Sync + 'static {}

impl<T> PartInt for T where T: PrimInt + Unsigned + Hash + Debug + Display + Default + Send + Sync + 'static {}

#[inline]
pub(crate) fn is_odd<N: PrimInt>(x: N) -> bool {
    x & N::one() == N::one()
}

/// `x - k` clamped at zero.
#[inline]
pub(crate) fn minus<N: PrimInt + Unsigned>(x: N, k: u8) -> N {
    // every unsigned primitive holds small constants
    x.saturating_sub(N::from(k).unwrap())
}

/// Converts a row count into the part type, `None` when it does not fit.
#[inline]
pub(crate) fn from_usize<T: PartInt>(x: usize) -> Option<T> {
    T::from(x)
}

#[inline]
pub(crate) fn to_u64<T: PartInt>(x: T) -> u64 {
    // unsigned primitives are at most 64 bits wide on supported targets
    x.to_u64().expect("part does not fit in u64")
}
