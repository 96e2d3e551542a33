use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::corenum::BernoulliNumbers;
use crate::triangle::{TriangleKind, TriangleTable};

/// Memo tables shared by every operation in the crate.
///
/// Mutating methods extend the caches on demand. The value is `Send + Sync`;
/// after a warm-up through `&mut self`, read-only accessors such as
/// [`Tables::cycle_table`] may be used from any number of readers.
#[derive(Clone, Debug)]
pub struct Tables {
    pub(crate) bernoulli: BernoulliNumbers,
    pub(crate) cycle: TriangleTable,
    pub(crate) partition: TriangleTable,
    pub(crate) bs_first_rows: BTreeMap<usize, Vec<BigInt>>,
    pub(crate) bs_second_rows: BTreeMap<usize, Vec<BigInt>>,
    pub(crate) power_sums: BTreeMap<(usize, usize), BigRational>,
}

impl Default for Tables {
    fn default() -> Self {
        Self::new()
    }
}

impl Tables {
    pub fn new() -> Self {
        Tables {
            bernoulli: BernoulliNumbers::new(),
            cycle: TriangleTable::new(TriangleKind::Cycle),
            partition: TriangleTable::new(TriangleKind::Partition),
            bs_first_rows: BTreeMap::new(),
            bs_second_rows: BTreeMap::new(),
            power_sums: BTreeMap::new(),
        }
    }

    pub fn bernoulli(&mut self, n: usize) -> BigRational {
        self.bernoulli.value(n)
    }

    pub fn bernoulli_numbers(&self) -> &BernoulliNumbers {
        &self.bernoulli
    }

    pub fn cycle_table(&self) -> &TriangleTable {
        &self.cycle
    }

    pub fn partition_table(&self) -> &TriangleTable {
        &self.partition
    }
}
