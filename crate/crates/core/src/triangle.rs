//! Row-indexed lower-triangular tables of exact integers.

use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TriangleKind {
    /// Unsigned Stirling numbers of the first kind.
    Cycle,
    /// Stirling numbers of the second kind.
    Partition,
    /// Bernoulli-Stirling numbers of the first kind, `A(n, k)`.
    BsFirst,
    /// Bernoulli-Stirling numbers of the second kind, `B(n, k)`.
    BsSecond,
    /// Matrix inverse of the `A` triangle.
    BsFirstInverse,
}

impl TriangleKind {
    pub fn name(self) -> &'static str {
        match self {
            TriangleKind::Cycle => "cycle",
            TriangleKind::Partition => "partition",
            TriangleKind::BsFirst => "a",
            TriangleKind::BsSecond => "b",
            TriangleKind::BsFirstInverse => "ainv",
        }
    }
}

impl fmt::Display for TriangleKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Rows `0..=max_n`; row `n` holds entries for `k = 0..=n`.
///
/// Entries above the diagonal are implicit zeros.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TriangleTable {
    kind: TriangleKind,
    rows: Vec<Vec<BigInt>>,
}

impl TriangleTable {
    pub fn new(kind: TriangleKind) -> Self {
        TriangleTable {
            kind,
            rows: Vec::new(),
        }
    }

    /// Builds a table from explicit rows.
    ///
    /// # Panics
    /// If row `n` does not have exactly `n + 1` entries.
    pub fn from_rows(kind: TriangleKind, rows: Vec<Vec<BigInt>>) -> Self {
        for (n, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), n + 1, "row {n} has wrong length");
        }
        TriangleTable { kind, rows }
    }

    pub fn kind(&self) -> TriangleKind {
        self.kind
    }

    /// Largest materialized row, `None` when empty.
    pub fn max_n(&self) -> Option<usize> {
        self.rows.len().checked_sub(1)
    }

    pub fn rows(&self) -> &[Vec<BigInt>] {
        &self.rows
    }

    pub fn row(&self, n: usize) -> Option<&[BigInt]> {
        self.rows.get(n).map(Vec::as_slice)
    }

    pub(crate) fn push_row(&mut self, row: Vec<BigInt>) {
        debug_assert_eq!(row.len(), self.rows.len() + 1);
        self.rows.push(row);
    }

    /// Entry `(n, k)`; zero above the diagonal or for negative `k`.
    /// `None` if row `n` has not been materialized.
    pub fn get(&self, n: usize, k: i64) -> Option<BigInt> {
        let row = self.rows.get(n)?;
        if k < 0 || k as usize > n {
            return Some(BigInt::zero());
        }
        Some(row[k as usize].clone())
    }

    /// Copy of rows `0..=max_n`.
    pub fn truncated(&self, max_n: usize) -> TriangleTable {
        TriangleTable {
            kind: self.kind,
            rows: self.rows.iter().take(max_n + 1).cloned().collect(),
        }
    }

    pub fn has_unit_diagonal(&self) -> bool {
        self.rows.iter().enumerate().all(|(n, r)| r[n].is_one())
    }
}
