//! Binary partitions: `b(n)` is the number of ways to write `2n` as a sum of
//! powers of two, order ignored (OEIS A000123).

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::SeqValue;

/// Prefix `b(0), ..., b(n_max)` of the binary partition sequence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BinPartTable {
    terms: Vec<SeqValue>,
}

impl BinPartTable {
    #[cfg(test)]
    pub(crate) fn from_terms(terms: Vec<SeqValue>) -> Self {
        debug_assert!(!terms.is_empty());
        BinPartTable { terms }
    }

    pub fn n_max(&self) -> usize {
        self.terms.len() - 1
    }

    pub fn get(&self, n: usize) -> Option<&SeqValue> {
        self.terms.get(n)
    }

    /// All terms, indexed from 0.
    pub fn terms(&self) -> &[SeqValue] {
        &self.terms
    }

    /// Checks that every term from index 1 on is even and that the terms
    /// strictly increase from index 1 on; the error names the first offender.
    pub fn check_shape(&self) -> Result<()> {
        for n in 1..self.terms.len() {
            if self.terms[n].is_odd() {
                return Err(Error::Integrity(format!(
                    "b({n}) = {} is odd",
                    self.terms[n]
                )));
            }
            if n >= 2 && self.terms[n] <= self.terms[n - 1] {
                return Err(Error::Integrity(format!(
                    "b({n}) does not exceed b({})",
                    n - 1
                )));
            }
        }
        Ok(())
    }
}

/// Number of multisets of powers of two summing to `2 * target_half` for
/// every `target_half` in `0..=n_max`, by the unbounded-parts DP.
fn oracle_prefix_unchecked(n_max: usize) -> Vec<SeqValue> {
    let target = 2 * n_max;
    let mut ways = vec![BigUint::zero(); target + 1];
    ways[0] = BigUint::one();
    // Powers outermost so each multiset is counted once.
    let mut part = 1usize;
    while part <= target {
        for s in part..=target {
            let prev = ways[s - part].clone();
            ways[s] += prev;
        }
        part <<= 1;
    }
    ways.into_iter().step_by(2).collect()
}

/// `b(n)` by counting partitions of `2n` into powers of two.
pub fn binary_partition_oracle(n: usize, guard: usize) -> Result<SeqValue> {
    let mut prefix = binary_partition_oracle_prefix(n, guard)?;
    Ok(prefix.pop().expect("prefix covers n"))
}

/// `b(0), ..., b(n_max)` from one run of the partition DP.
pub fn binary_partition_oracle_prefix(n_max: usize, guard: usize) -> Result<Vec<SeqValue>> {
    if n_max > guard {
        return Err(Error::guard("binary partition oracle", n_max, guard));
    }
    Ok(oracle_prefix_unchecked(n_max))
}

/// Fills `b(1..=n_max)` with `b(n) = b(n-1) + b(floor(n/2))` from the seed
/// `b(1) = 2`. `b(0) = 1` is stored but never read by the recurrence.
pub fn b_table_recursive(n_max: usize) -> Result<BinPartTable> {
    if n_max == 0 {
        return Err(Error::range(
            "binary partition recurrence",
            "n_max must be at least 1 (the recurrence is seeded at b(1) = 2)",
        ));
    }
    let mut terms = Vec::with_capacity(n_max + 1);
    terms.push(BigUint::one());
    terms.push(BigUint::from(2u32));
    for n in 2..=n_max {
        let next = &terms[n - 1] + &terms[n / 2];
        terms.push(next);
    }
    Ok(BinPartTable { terms })
}
