//! The max/min split sequence: `a(1) = 1` and, for `n >= 2`,
//! `a(n) = M(n) + m(n)` where `M(n)` and `m(n)` are the maximum and minimum
//! of `a(i) + a(n - i)` over `1 <= i < n`.
//!
//! Besides the definition, the family has closed forms through the binary
//! partition numbers `b`:
//!
//! ```text
//! m(n) = 3 b(n-1) / 2 - 1            (n >= 2)
//! M(n) = n + m(1) + ... + m(n-1)     (with m(1) = 0)
//! a(n) = M(n+1) - 1
//! ```
//!
//! `M` and `m` have no value at `n = 1` by definition (there is no split);
//! which value `m(1)` takes inside the prefix sum is recorded by
//! [`M1Convention`].

use std::fmt;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::binary_partitions::BinPartTable;
use crate::error::{Error, Result};
use crate::SeqValue;

/// Value assigned to `m(1)` where a formula needs one.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum M1Convention {
    Zero,
    One,
    /// The empty split set has no minimum.
    Undefined,
}

impl M1Convention {
    pub fn value(self) -> Option<SeqValue> {
        match self {
            M1Convention::Zero => Some(BigUint::zero()),
            M1Convention::One => Some(BigUint::one()),
            M1Convention::Undefined => None,
        }
    }
}

impl fmt::Display for M1Convention {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            M1Convention::Zero => "zero",
            M1Convention::One => "one",
            M1Convention::Undefined => "undefined",
        })
    }
}

/// Aligned `a`, `M`, `m` terms for `n` up to `n_max`.
///
/// `a` is indexed from 1; `M` and `m` from 2.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Conj115Table {
    a: Vec<SeqValue>,
    big_m: Vec<SeqValue>,
    small_m: Vec<SeqValue>,
    m1_convention: M1Convention,
}

impl Conj115Table {
    pub fn n_max(&self) -> usize {
        self.a.len()
    }

    pub fn m1_convention(&self) -> M1Convention {
        self.m1_convention
    }

    pub fn a(&self, n: usize) -> Option<&SeqValue> {
        n.checked_sub(1).and_then(|i| self.a.get(i))
    }

    /// `M(n)`; `None` for `n < 2` or beyond the table.
    pub fn big_m(&self, n: usize) -> Option<&SeqValue> {
        n.checked_sub(2).and_then(|i| self.big_m.get(i))
    }

    /// `m(n)`; `None` for `n < 2` or beyond the table.
    pub fn small_m(&self, n: usize) -> Option<&SeqValue> {
        n.checked_sub(2).and_then(|i| self.small_m.get(i))
    }

    /// `m(n)` with `m(1)` taken from the table's convention.
    pub fn small_m_with_convention(&self, n: usize) -> Option<SeqValue> {
        if n == 1 {
            self.m1_convention.value()
        } else {
            self.small_m(n).cloned()
        }
    }

    fn term(&self, what: &'static str, n: usize) -> Result<&SeqValue> {
        self.a(n).ok_or_else(|| {
            Error::range(
                what,
                format!("a({n}) is outside the table [1, {}]", self.n_max()),
            )
        })
    }
}

fn check_n_max(n_max: usize) -> Result<()> {
    if n_max == 0 {
        return Err(Error::range(
            "max/min split table",
            "n_max must be at least 1",
        ));
    }
    Ok(())
}

/// Builds the table straight from the definition, scanning every split
/// `1 <= i < n` for each `n`. Quadratic in `n_max`.
pub fn conj115_definition_table(n_max: usize, guard: usize) -> Result<Conj115Table> {
    check_n_max(n_max)?;
    if n_max > guard {
        return Err(Error::guard("max/min split definition", n_max, guard));
    }
    // a[i] holds a(i + 1).
    let mut a: Vec<SeqValue> = Vec::with_capacity(n_max);
    let mut big_m = Vec::with_capacity(n_max.saturating_sub(1));
    let mut small_m = Vec::with_capacity(n_max.saturating_sub(1));
    a.push(BigUint::one());
    let mut sum = BigUint::zero();
    for n in 2..=n_max {
        let mut hi: Option<SeqValue> = None;
        let mut lo: Option<SeqValue> = None;
        for i in 1..n {
            sum.clone_from(&a[i - 1]);
            sum += &a[n - i - 1];
            if hi.as_ref().is_none_or(|h| sum > *h) {
                hi = Some(sum.clone());
            }
            if lo.as_ref().is_none_or(|l| sum < *l) {
                lo = Some(sum.clone());
            }
        }
        let (hi, lo) = (hi.expect("n >= 2"), lo.expect("n >= 2"));
        a.push(&hi + &lo);
        big_m.push(hi);
        small_m.push(lo);
    }
    Ok(Conj115Table {
        a,
        big_m,
        small_m,
        m1_convention: M1Convention::Undefined,
    })
}

/// Builds the table from the closed forms with `m(1) = 0`.
pub fn conj115_closed_form_table(n_max: usize, b: &BinPartTable) -> Result<Conj115Table> {
    conj115_closed_form_table_with(n_max, b, M1Convention::Zero)
}

/// Builds the table from the closed forms with `m(1)` set by `m1`.
///
/// Reads `b(1), ..., b(n_max - 1)`. Every term read must be even so that
/// `3 b / 2` is exact; an odd term is reported as an integrity error.
pub fn conj115_closed_form_table_with(
    n_max: usize,
    b: &BinPartTable,
    m1: M1Convention,
) -> Result<Conj115Table> {
    check_n_max(n_max)?;
    let m1_value = m1.value().ok_or_else(|| {
        Error::range(
            "max/min split closed form",
            "the prefix sum needs a defined m(1)",
        )
    })?;
    if n_max >= 2 && b.n_max() < n_max - 1 {
        return Err(Error::range(
            "max/min split closed form",
            format!(
                "b covers [0, {}] but n_max = {n_max} needs b({})",
                b.n_max(),
                n_max - 1
            ),
        ));
    }

    // m(2..=n_max)
    let mut small_m = Vec::with_capacity(n_max.saturating_sub(1));
    for n in 2..=n_max {
        let b_prev = b.get(n - 1).expect("coverage checked");
        let (half, rem) = b_prev.div_rem(&BigUint::from(2u32));
        if !rem.is_zero() {
            return Err(Error::Integrity(format!(
                "b({}) = {b_prev} is odd; 3 b / 2 is not an integer",
                n - 1
            )));
        }
        small_m.push(half * 3u32 - 1u32);
    }

    // M(n) = n + sum_{k<n} m(k) for n = 2..=n_max+1; a(n) = M(n+1) - 1.
    let mut big_m = Vec::with_capacity(n_max);
    let mut prefix = m1_value;
    for n in 2..=n_max + 1 {
        big_m.push(&prefix + n);
        if n <= n_max {
            prefix += &small_m[n - 2];
        }
    }
    let a = big_m.iter().map(|m| m - 1u32).collect();
    big_m.pop();

    Ok(Conj115Table {
        a,
        big_m,
        small_m,
        m1_convention: m1,
    })
}

/// `a(floor(n/2)) + a(ceil(n/2))`, the value the minimum split takes.
pub fn m_via_prop4(table: &Conj115Table, n: usize) -> Result<SeqValue> {
    const WHAT: &str = "m(n) from the balanced split";
    if n < 2 || n > table.n_max() {
        return Err(Error::range(
            WHAT,
            format!("n = {n} outside [2, {}]", table.n_max()),
        ));
    }
    let (q, r) = n.div_rem(&2);
    Ok(table.term(WHAT, q)? + table.term(WHAT, q + r)?)
}

/// `a(n - 1) + 1`, the value the maximum split takes.
pub fn big_m_via_prop2(table: &Conj115Table, n: usize) -> Result<SeqValue> {
    const WHAT: &str = "M(n) from a(n - 1)";
    if n < 2 || n > table.n_max() + 1 {
        return Err(Error::range(
            WHAT,
            format!("n = {n} outside [2, {}]", table.n_max() + 1),
        ));
    }
    Ok(table.term(WHAT, n - 1)? + 1u32)
}
