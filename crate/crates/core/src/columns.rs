use std::fmt;

use crate::error::{Error, Result};

/// Largest column count a [`ColumnSet`] can address.
pub const MAX_COLUMNS: usize = 63;

/// A set of column indices, stored as a bitmask (bit `j` is column `j`,
/// 0-based). Displayed 1-based, e.g. `{1,2}`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct ColumnSet(u64);

impl ColumnSet {
    pub const EMPTY: ColumnSet = ColumnSet(0);

    pub fn from_bits(bits: u64) -> Self {
        ColumnSet(bits)
    }

    /// `{0, ..., m-1}`.
    pub fn full(m: usize) -> Self {
        debug_assert!(m <= MAX_COLUMNS);
        ColumnSet((1u64 << m) - 1)
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(indices: I) -> Result<Self> {
        let mut bits = 0u64;
        for j in indices {
            if j >= MAX_COLUMNS {
                return Err(Error::contract(format!("column index {j} out of range")));
            }
            bits |= 1 << j;
        }
        Ok(ColumnSet(bits))
    }

    /// Builds a set from 1-based indices as used in files and diagnostics.
    pub fn from_one_based<I: IntoIterator<Item = usize>>(indices: I) -> Result<Self> {
        let mut zero_based = Vec::new();
        for j in indices {
            if j == 0 {
                return Err(Error::contract("column indices are 1-based"));
            }
            zero_based.push(j - 1);
        }
        Self::from_indices(zero_based)
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    pub fn contains(self, j: usize) -> bool {
        j < 64 && self.0 & (1 << j) != 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn is_subset(self, other: ColumnSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_proper_subset(self, other: ColumnSet) -> bool {
        self != other && self.is_subset(other)
    }

    pub fn complement(self, m: usize) -> ColumnSet {
        ColumnSet(!self.0 & Self::full(m).0)
    }

    pub fn union(self, other: ColumnSet) -> ColumnSet {
        ColumnSet(self.0 | other.0)
    }

    pub fn intersection(self, other: ColumnSet) -> ColumnSet {
        ColumnSet(self.0 & other.0)
    }

    /// Indices in ascending order, 0-based.
    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut rest = self.0;
        std::iter::from_fn(move || {
            if rest == 0 {
                None
            } else {
                let j = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                Some(j)
            }
        })
    }

    pub fn to_one_based(self) -> Vec<usize> {
        self.iter().map(|j| j + 1).collect()
    }
}

impl fmt::Debug for ColumnSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, j) in self.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", j + 1)?;
        }
        write!(f, "}}")
    }
}

impl fmt::Display for ColumnSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}
