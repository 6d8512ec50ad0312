//! Integer partitions (Young diagrams): validation, text format, conjugation
//! and the staircase / rectangle / gamma families.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::num::{from_usize, to_u64, PartInt};
use crate::view::SubpositionView;

/// Upper bound on the number of parts accepted from text or family constructors.
pub const MAX_PARTS: usize = 1 << 26;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PartitionError {
    #[error("malformed token {token:?} at position {index}")]
    Parse { index: usize, token: String },
    #[error("not a partition: part {index} is larger than the part before it")]
    NotAPartition { index: usize },
    #[error("not a partition: part {index} is zero")]
    ZeroPart { index: usize },
    #[error("invalid family parameter: {0}")]
    InvalidFamilyParam(String),
    #[error("partition has more than {max} parts")]
    TooManyParts { max: usize },
    #[error("number of boxes overflows u64")]
    Overflow,
}

/// A partition stored as its non-increasing list of positive parts.
///
/// The number of boxes is not cached; [`Partition::size`] sums with overflow
/// checks so that tall boards with huge parts are still representable.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Partition<T = u64> {
    parts: Vec<T>,
}

impl<T: PartInt> Partition<T> {
    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// Validates `parts` as a partition.
    pub fn new(parts: Vec<T>) -> Result<Self, PartitionError> {
        for (index, &p) in parts.iter().enumerate() {
            if p.is_zero() {
                return Err(PartitionError::ZeroPart { index });
            }
            if index > 0 && p > parts[index - 1] {
                return Err(PartitionError::NotAPartition { index });
            }
        }
        Ok(Partition { parts })
    }

    pub(crate) fn from_sorted_unchecked(parts: Vec<T>) -> Self {
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        debug_assert!(parts.iter().all(|p| !p.is_zero()));
        Partition { parts }
    }

    pub fn parts(&self) -> &[T] {
        &self.parts
    }

    pub fn into_parts(self) -> Vec<T> {
        self.parts
    }

    /// Number of rows.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Length of the first row, zero for the empty partition.
    pub fn first(&self) -> T {
        self.parts.first().copied().unwrap_or_else(T::zero)
    }

    /// Number of boxes.
    pub fn size(&self) -> Result<u64, PartitionError> {
        self.parts
            .iter()
            .try_fold(0u64, |acc, &p| acc.checked_add(to_u64(p)))
            .ok_or(PartitionError::Overflow)
    }

    /// The transposed diagram. Each column length is found by binary search
    /// over the rows, so the cost is `first() * log(len())`.
    ///
    /// Panics if the number of rows does not fit in `T`.
    pub fn conjugate(&self) -> Self {
        let width = to_u64(self.first());
        let mut parts = Vec::with_capacity(width as usize);
        let mut col = T::one();
        for _ in 0..width {
            let count = self.parts.partition_point(|&p| p >= col);
            parts.push(from_usize::<T>(count).expect("row count does not fit in the part type"));
            col = col + T::one();
        }
        Partition { parts }
    }

    /// The whole diagram as a subposition with zero offsets.
    pub fn view(&self) -> SubpositionView<'_, T> {
        SubpositionView::new(self, 0, T::zero())
    }

    /// `self[row, col]` as a view, without materializing it.
    pub fn at(&self, row: usize, col: T) -> SubpositionView<'_, T> {
        SubpositionView::new(self, row, col)
    }

    /// Parses the comma separated text format, e.g. `6,4^2,2,1^2`.
    pub fn parse(text: &str) -> Result<Self, PartitionError> {
        if text.trim().is_empty() {
            return Ok(Self::empty());
        }
        let mut parts: Vec<T> = Vec::new();
        for (index, raw) in text.split(',').enumerate() {
            let token = raw.trim();
            let bad = || PartitionError::Parse { index, token: token.to_string() };
            let (value, count) = match token.split_once('^') {
                Some((v, m)) => (v.trim(), m.trim().parse::<usize>().map_err(|_| bad())?),
                None => (token, 1),
            };
            if count == 0 || value.starts_with('+') {
                return Err(bad());
            }
            let value = T::from_str_radix(value, 10).map_err(|_| bad())?;
            if value.is_zero() {
                return Err(bad());
            }
            if parts.len().saturating_add(count) > MAX_PARTS {
                return Err(PartitionError::TooManyParts { max: MAX_PARTS });
            }
            if let Some(&last) = parts.last() {
                if value > last {
                    return Err(PartitionError::NotAPartition { index: parts.len() });
                }
            }
            parts.extend(std::iter::repeat_n(value, count));
        }
        Ok(Partition { parts })
    }

    pub fn family(spec: FamilySpec) -> Result<Self, PartitionError> {
        make_family(spec)
    }

    /// Runs of equal parts as `(part, multiplicity)`, largest part first.
    pub fn runs(&self) -> Vec<(T, usize)> {
        let mut out: Vec<(T, usize)> = Vec::new();
        for &p in &self.parts {
            match out.last_mut() {
                Some((q, m)) if *q == p => *m += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }
}

impl<T: PartInt> FromStr for Partition<T> {
    type Err = PartitionError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Self::parse(s)
    }
}

/// Canonical text: exponents for runs of two or more, `""` for the empty partition.
impl<T: PartInt> fmt::Display for Partition<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, (p, m)) in self.runs().into_iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            if m >= 2 {
                write!(f, "{p}^{m}")?;
            } else {
                write!(f, "{p}")?;
            }
        }
        Ok(())
    }
}

impl<T: PartInt> fmt::Debug for Partition<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<{self}>")
    }
}

/// One of the three named families of boards.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FamilySpec {
    /// `(r, r-1, ..., 1)`
    Staircase { r: u64 },
    /// `c` repeated `r` times
    Rectangle { r: u64, c: u64 },
    /// `(c, 1, ..., 1)` with `r` rows
    Gamma { r: u64, c: u64 },
}

impl FamilySpec {
    pub fn name(&self) -> &'static str {
        match self {
            FamilySpec::Staircase { .. } => "staircase",
            FamilySpec::Rectangle { .. } => "rectangle",
            FamilySpec::Gamma { .. } => "gamma",
        }
    }

    /// Number of rows.
    pub fn rows(&self) -> u64 {
        match *self {
            FamilySpec::Staircase { r } | FamilySpec::Rectangle { r, .. } | FamilySpec::Gamma { r, .. } => r,
        }
    }

    /// Length of the first row.
    pub fn cols(&self) -> u64 {
        match *self {
            FamilySpec::Staircase { r } => r,
            FamilySpec::Rectangle { c, .. } | FamilySpec::Gamma { c, .. } => c,
        }
    }

    pub fn validate(&self) -> Result<(), PartitionError> {
        let (r, c) = (self.rows(), self.cols());
        if r == 0 || c == 0 {
            return Err(PartitionError::InvalidFamilyParam(format!("{self}: r and c must be positive")));
        }
        if r > MAX_PARTS as u64 {
            return Err(PartitionError::TooManyParts { max: MAX_PARTS });
        }
        Ok(())
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            FamilySpec::Staircase { r } => write!(f, "staircase({r})"),
            FamilySpec::Rectangle { r, c } => write!(f, "rectangle({r},{c})"),
            FamilySpec::Gamma { r, c } => write!(f, "gamma({r},{c})"),
        }
    }
}

pub fn make_family<T: PartInt>(spec: FamilySpec) -> Result<Partition<T>, PartitionError> {
    spec.validate()?;
    let too_wide = || PartitionError::InvalidFamilyParam(format!("{spec}: part does not fit the part type"));
    let rows = spec.rows() as usize;
    let parts = match spec {
        FamilySpec::Staircase { r } => {
            T::from(r).ok_or_else(too_wide)?;
            (1..=r).rev().map(|p| T::from(p).unwrap()).collect()
        }
        FamilySpec::Rectangle { c, .. } => vec![T::from(c).ok_or_else(too_wide)?; rows],
        FamilySpec::Gamma { c, .. } => {
            let mut parts = vec![T::one(); rows];
            parts[0] = T::from(c).ok_or_else(too_wide)?;
            parts
        }
    };
    Ok(Partition::from_sorted_unchecked(parts))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[u64]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn parses_exponential_notation() {
        let q: Partition = "6,4^2,2,1^2".parse().unwrap();
        assert_eq!(q.parts(), &[6, 4, 4, 2, 1, 1]);
        assert_eq!(q.size().unwrap(), 18);
        assert_eq!(q.to_string(), "6,4^2,2,1^2");
    }

    #[test]
    fn parses_empty_and_whitespace() {
        let q: Partition = "".parse().unwrap();
        assert!(q.is_empty());
        assert_eq!(q.size().unwrap(), 0);
        let q: Partition = "  ".parse().unwrap();
        assert!(q.is_empty());
        let q: Partition = " 3 , 2 ^ 2 ,1".parse().unwrap();
        assert_eq!(q.parts(), &[3, 2, 2, 1]);
    }

    #[test]
    fn rejects_increasing_step() {
        assert_eq!(Partition::<u64>::parse("3,5"), Err(PartitionError::NotAPartition { index: 1 }));
        assert_eq!(Partition::<u64>::parse("3^2,2,4"), Err(PartitionError::NotAPartition { index: 3 }));
        assert_eq!(Partition::<u64>::new(vec![1, 2]), Err(PartitionError::NotAPartition { index: 1 }));
    }

    #[test]
    fn rejects_malformed_tokens() {
        for (text, index) in [("a", 0), ("3,,1", 1), ("3,0", 1), ("2^0", 0), ("2^", 0), ("-1", 0), ("3,", 1), ("+3", 0)] {
            match Partition::<u64>::parse(text) {
                Err(PartitionError::Parse { index: i, .. }) => assert_eq!(i, index, "{text}"),
                other => panic!("{text}: {other:?}"),
            }
        }
        assert_eq!(Partition::<u64>::new(vec![2, 0]), Err(PartitionError::ZeroPart { index: 1 }));
    }

    #[test]
    fn rejects_parts_outside_type() {
        assert!(matches!(Partition::<u8>::parse("256"), Err(PartitionError::Parse { .. })));
        assert!(Partition::<u8>::parse("255").is_ok());
    }

    #[test]
    fn rejects_huge_exponent() {
        assert_eq!(
            Partition::<u64>::parse("1^100000000000"),
            Err(PartitionError::TooManyParts { max: MAX_PARTS })
        );
    }

    #[test]
    fn size_overflow_is_reported() {
        let q = p(&[u64::MAX, u64::MAX]);
        assert_eq!(q.size(), Err(PartitionError::Overflow));
    }

    #[test]
    fn conjugate_examples() {
        assert_eq!(p(&[6, 4, 4, 2, 1, 1]).conjugate(), p(&[6, 4, 3, 3, 1, 1]));
        assert_eq!(p(&[]).conjugate(), p(&[]));
        assert_eq!(p(&[5]).conjugate(), p(&[1, 1, 1, 1, 1]));
        assert_eq!(p(&[6, 4, 3, 3, 1, 1]).conjugate(), p(&[6, 4, 4, 2, 1, 1]));
    }

    #[test]
    fn families() {
        assert_eq!(make_family::<u64>(FamilySpec::Staircase { r: 6 }).unwrap(), p(&[6, 5, 4, 3, 2, 1]));
        assert_eq!(make_family::<u64>(FamilySpec::Rectangle { r: 6, c: 4 }).unwrap(), p(&[4; 6]));
        assert_eq!(make_family::<u64>(FamilySpec::Gamma { r: 6, c: 4 }).unwrap(), p(&[4, 1, 1, 1, 1, 1]));
        assert_eq!(make_family::<u64>(FamilySpec::Gamma { r: 1, c: 1 }).unwrap(), p(&[1]));
        assert!(matches!(
            make_family::<u64>(FamilySpec::Rectangle { r: 0, c: 3 }),
            Err(PartitionError::InvalidFamilyParam(_))
        ));
        assert!(matches!(
            make_family::<u64>(FamilySpec::Gamma { r: 2, c: 0 }),
            Err(PartitionError::InvalidFamilyParam(_))
        ));
        assert!(matches!(
            make_family::<u8>(FamilySpec::Staircase { r: 300 }),
            Err(PartitionError::InvalidFamilyParam(_))
        ));
    }

    #[test]
    fn narrow_part_type() {
        let q = make_family::<u32>(FamilySpec::Staircase { r: 4 }).unwrap();
        assert_eq!(q.parts(), &[4u32, 3, 2, 1]);
        assert_eq!(q.conjugate(), q);
    }
}
