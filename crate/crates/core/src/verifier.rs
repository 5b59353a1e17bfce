//! Runs the known identities of both sequence families over index ranges,
//! pitting independent computation paths against each other.
//!
//! Each identity yields one [`IdentityReport`]. A check stops at its first
//! counterexample (which is therefore the smallest failing index) but the
//! remaining identities still run.

use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::and_pairs::{
    and_pairs_bruteforce_prefix, and_pairs_fast, parity_split_prefix, zero_and_pairs_digitdp,
};
use crate::binary_partitions::{b_table_recursive, binary_partition_oracle_prefix};
use crate::error::{Error, Result};
use crate::guard::Guards;
use crate::maxmin::{
    big_m_via_prop2, conj115_closed_form_table_with, conj115_definition_table, m_via_prop4,
    Conj115Table, M1Convention,
};
use crate::SeqValue;

/// The identities the verifier knows how to check.
///
/// For equalities, a failure carries the reference value as `expected` and
/// the value produced by the route under test as `actual`. The two
/// non-equality checks use the fields as follows: for [`C115Prop1`]
/// `expected` is the previous term (which must be exceeded) and `actual`
/// the term itself; for [`BEven`] they are the remainders mod 2 (`0` and `1`).
///
/// [`C115Prop1`]: IdentityId::C115Prop1
/// [`BEven`]: IdentityId::BEven
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum IdentityId {
    /// `a(2k) = 3 a(k) + k^2`, and the evaluator agrees with brute force on
    /// even indices.
    C110Even,
    /// `a(2k+1) = a(k) + 2 a(k+1) + k^2 - 1` for `k >= 1`, and the evaluator
    /// agrees with brute force on odd indices.
    C110Odd,
    /// `a(n) + zero(n) = n^2` with the evaluator and the digit DP.
    C110Complement,
    /// Parity class counts of `S_n` against the halving formulas.
    C110ParitySplit,
    C115DefVsClosed,
    /// `a`, `M`, `m` strictly increasing and positive.
    C115Prop1,
    /// `M(n+1) = a(n) + 1`.
    C115Prop2,
    /// `m(n) = a(floor(n/2)) + a(ceil(n/2))`.
    C115Prop4,
    /// `M(n) = n + m(1) + ... + m(n-1)` under the chosen `m(1)`.
    C115Cor3,
    /// `a(n) + 1 = a(i) + m(i+1) + ... + m(n) + (n - i + 1)` for `1 <= i < n`.
    C115Eq1,
    BOracleVsRec,
    BEven,
    /// A computed prefix against an OEIS b-file.
    OeisCrosscheck,
}

impl IdentityId {
    pub fn as_str(self) -> &'static str {
        match self {
            IdentityId::C110Even => "C110_EVEN",
            IdentityId::C110Odd => "C110_ODD",
            IdentityId::C110Complement => "C110_COMPLEMENT",
            IdentityId::C110ParitySplit => "C110_PARITY_SPLIT",
            IdentityId::C115DefVsClosed => "C115_DEF_VS_CLOSED",
            IdentityId::C115Prop1 => "C115_PROP1",
            IdentityId::C115Prop2 => "C115_PROP2",
            IdentityId::C115Prop4 => "C115_PROP4",
            IdentityId::C115Cor3 => "C115_COR3",
            IdentityId::C115Eq1 => "C115_EQ1",
            IdentityId::BOracleVsRec => "B_ORACLE_VS_REC",
            IdentityId::BEven => "B_EVEN",
            IdentityId::OeisCrosscheck => "OEIS_CROSSCHECK",
        }
    }
}

impl fmt::Display for IdentityId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Skipped => "skipped",
        })
    }
}

/// Inclusive index interval.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct IndexRange {
    pub lo: i64,
    pub hi: i64,
}

impl fmt::Display for IndexRange {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}..{}", self.lo, self.hi)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Failure {
    pub index: i64,
    pub expected: SeqValue,
    pub actual: SeqValue,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityReport {
    pub identity: IdentityId,
    /// `None` exactly when the identity was skipped.
    pub range: Option<IndexRange>,
    pub status: Status,
    /// Present exactly when `status` is [`Status::Fail`].
    pub first_failure: Option<Failure>,
    pub elapsed: Duration,
}

impl IdentityReport {
    pub fn skipped(identity: IdentityId) -> Self {
        IdentityReport {
            identity,
            range: None,
            status: Status::Skipped,
            first_failure: None,
            elapsed: Duration::ZERO,
        }
    }

    pub fn is_fail(&self) -> bool {
        self.status == Status::Fail
    }

    /// Serialized form with every number as a decimal string.
    pub fn to_record(&self) -> ReportRecord {
        ReportRecord {
            identity: self.identity,
            range: self.range.map(|r| r.to_string()),
            status: self.status,
            first_failure: self.first_failure.as_ref().map(|f| FailureRecord {
                index: f.index.to_string(),
                expected: f.expected.to_string(),
                actual: f.actual.to_string(),
            }),
            elapsed_ms: self.elapsed.as_secs_f64() * 1e3,
        }
    }

    /// Comparison key that ignores timing.
    pub fn outcome(&self) -> (IdentityId, Option<IndexRange>, Status, Option<&Failure>) {
        (
            self.identity,
            self.range,
            self.status,
            self.first_failure.as_ref(),
        )
    }
}

/// Wire form of an [`IdentityReport`]: one JSON object per report.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReportRecord {
    pub identity: IdentityId,
    /// `"lo..hi"`, inclusive on both ends; `null` when skipped.
    pub range: Option<String>,
    pub status: Status,
    pub first_failure: Option<FailureRecord>,
    pub elapsed_ms: f64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FailureRecord {
    pub index: String,
    pub expected: String,
    pub actual: String,
}

/// Runs `check` for every index of `lo..=hi` in order, stopping at the first
/// index for which it returns `Some((expected, actual))`.
pub(crate) fn run_check<F>(identity: IdentityId, lo: i64, hi: i64, mut check: F) -> IdentityReport
where
    F: FnMut(i64) -> Option<(SeqValue, SeqValue)>,
{
    if lo > hi {
        return IdentityReport::skipped(identity);
    }
    let start = Instant::now();
    let first_failure = (lo..=hi).find_map(|index| {
        check(index).map(|(expected, actual)| Failure {
            index,
            expected,
            actual,
        })
    });
    IdentityReport {
        identity,
        range: Some(IndexRange { lo, hi }),
        status: if first_failure.is_some() {
            Status::Fail
        } else {
            Status::Pass
        },
        first_failure,
        elapsed: start.elapsed(),
    }
}

/// `Some((expected, actual))` when they differ.
fn mismatch(expected: &SeqValue, actual: SeqValue) -> Option<(SeqValue, SeqValue)> {
    (*expected != actual).then(|| (expected.clone(), actual))
}

/// Fast evaluator for the AND-pair count under test.
pub trait AndPairsEvaluator {
    fn evaluate(&self, n: &BigUint) -> SeqValue;
}

/// The memoized halving recurrence.
#[derive(Debug, Default, Clone, Copy)]
pub struct RecursiveEvaluator;

impl AndPairsEvaluator for RecursiveEvaluator {
    fn evaluate(&self, n: &BigUint) -> SeqValue {
        and_pairs_fast(n)
    }
}

impl<F: Fn(&BigUint) -> SeqValue> AndPairsEvaluator for F {
    fn evaluate(&self, n: &BigUint) -> SeqValue {
        self(n)
    }
}

/// Checks the AND-pair identities for every index up to `n_max` with the
/// recursive evaluator.
pub fn verify_conjecture_110(n_max: usize, guards: &Guards) -> Result<Vec<IdentityReport>> {
    verify_conjecture_110_with(n_max, guards, &RecursiveEvaluator)
}

/// As [`verify_conjecture_110`], with the fast path replaced by `evaluator`.
pub fn verify_conjecture_110_with(
    n_max: usize,
    guards: &Guards,
    evaluator: &dyn AndPairsEvaluator,
) -> Result<Vec<IdentityReport>> {
    let brute = and_pairs_bruteforce_prefix(n_max, guards.brute_force)?;
    let splits = parity_split_prefix(n_max, guards.brute_force)?;
    let top = n_max as i64;
    let at = |i: i64| &brute[i as usize];
    let square = |k: i64| BigUint::from(k as u64).pow(2);

    let even = run_check(IdentityId::C110Even, 0, top - top % 2, |idx| {
        if idx % 2 != 0 {
            return None;
        }
        let k = idx / 2;
        mismatch(at(idx), at(k) * 3u32 + square(k))
            .or_else(|| mismatch(at(idx), evaluator.evaluate(&BigUint::from(idx as u64))))
    });

    let odd_hi = if top % 2 == 1 { top } else { top - 1 };
    let odd = run_check(IdentityId::C110Odd, 3, odd_hi, |idx| {
        if idx % 2 != 1 {
            return None;
        }
        let k = idx / 2;
        let rhs = at(k) + at(k + 1) * 2u32 + square(k) - 1u32;
        mismatch(at(idx), rhs)
            .or_else(|| mismatch(at(idx), evaluator.evaluate(&BigUint::from(idx as u64))))
    });

    let complement = run_check(IdentityId::C110Complement, 0, top, |idx| {
        let n = BigUint::from(idx as u64);
        let sum = evaluator.evaluate(&n) + zero_and_pairs_digitdp(&n);
        mismatch(&(&n * &n), sum)
    });

    let parity = run_check(IdentityId::C110ParitySplit, 0, top, |idx| {
        let s = &splits[idx as usize];
        let k = idx / 2;
        let k_sq = square(k);
        mismatch(at(idx), s.total())
            .or_else(|| mismatch(&s.eo, s.oe.clone()))
            .or_else(|| mismatch(&k_sq, s.oo.clone()))
            .or_else(|| {
                if idx % 2 == 0 {
                    mismatch(at(k), s.ee.clone())
                        .or_else(|| mismatch(at(k), s.eo.clone()))
                        .or_else(|| mismatch(at(k), s.oe.clone()))
                } else if k >= 1 {
                    // |OE| = (a(k+1) + a(k) - 1) / 2; a(k+1) + a(k) is odd
                    // for k >= 1, so compare 2 |OE| + 1 first.
                    let sum = at(k + 1) + at(k);
                    mismatch(at(k + 1), s.ee.clone()).or_else(|| {
                        let twice_plus_one = &s.oe * 2u32 + 1u32;
                        (twice_plus_one != sum).then(|| ((sum - 1u32) / 2u32, s.oe.clone()))
                    })
                } else {
                    None
                }
            })
    });

    Ok(vec![even, odd, complement, parity])
}

/// Checks the max/min split identities and the binary partition checks for
/// `n` up to `n_max`.
///
/// `m1` selects the value of `m(1)` used by the closed-form table and by the
/// prefix-sum identity; it must be [`M1Convention::Zero`] or
/// [`M1Convention::One`].
pub fn verify_conjecture_115(
    n_max: usize,
    m1: M1Convention,
    guards: &Guards,
) -> Result<Vec<IdentityReport>> {
    let m1_value = m1
        .value()
        .ok_or_else(|| Error::range("conjecture 115 verification", "m1 must be zero or one"))?;
    if n_max == 0 {
        return Err(Error::range(
            "conjecture 115 verification",
            "n_max must be at least 1",
        ));
    }
    let def = conj115_definition_table(n_max, guards.definition)?;
    let oracle_b = binary_partition_oracle_prefix(n_max, guards.binpart_oracle)?;
    let b = b_table_recursive(n_max)?;
    let closed = conj115_closed_form_table_with(n_max, &b, m1)?;
    let top = n_max as i64;
    let eq1_top = top.min(guards.eq1_cap as i64);

    let a = |n: i64| def.a(n as usize).expect("in range");
    let big_m = |n: i64| def.big_m(n as usize).expect("in range");
    let small_m = |n: i64| def.small_m(n as usize).expect("in range");

    let def_vs_closed = run_check(IdentityId::C115DefVsClosed, 1, top, |n| {
        let n = n as usize;
        let pick = |f: fn(&Conj115Table, usize) -> Option<&SeqValue>| {
            mismatch(
                f(&def, n).expect("in range"),
                f(&closed, n).expect("in range").clone(),
            )
        };
        let first = pick(|t, n| t.a(n));
        if n < 2 {
            return first;
        }
        first
            .or_else(|| pick(|t, n| t.big_m(n)))
            .or_else(|| pick(|t, n| t.small_m(n)))
    });

    let prop1 = run_check(IdentityId::C115Prop1, 2, top, |n| {
        let increasing =
            |prev: &SeqValue, cur: &SeqValue| (cur <= prev).then(|| (prev.clone(), cur.clone()));
        let zero = BigUint::zero();
        increasing(&zero, a(n - 1))
            .or_else(|| increasing(a(n - 1), a(n)))
            .or_else(|| increasing(&zero, big_m(n)))
            .or_else(|| increasing(&zero, small_m(n)))
            .or_else(|| {
                (n >= 3)
                    .then(|| increasing(big_m(n - 1), big_m(n)))
                    .flatten()
            })
            .or_else(|| {
                (n >= 3)
                    .then(|| increasing(small_m(n - 1), small_m(n)))
                    .flatten()
            })
    });

    let prop2 = run_check(IdentityId::C115Prop2, 2, top, |n| {
        mismatch(
            big_m(n),
            big_m_via_prop2(&def, n as usize).expect("in range"),
        )
    });

    let prop4 = run_check(IdentityId::C115Prop4, 2, top, |n| {
        mismatch(small_m(n), m_via_prop4(&def, n as usize).expect("in range"))
    });

    // prefix[n] = m(1) + ... + m(n) with the chosen m(1); prefix[0] = 0.
    let mut prefix = Vec::with_capacity(n_max + 1);
    prefix.push(BigUint::zero());
    prefix.push(m1_value);
    for n in 2..=top {
        let next = &prefix[n as usize - 1] + small_m(n);
        prefix.push(next);
    }

    let cor3 = run_check(IdentityId::C115Cor3, 2, top, |n| {
        mismatch(big_m(n), &prefix[n as usize - 1] + BigUint::from(n as u64))
    });

    let eq1 = run_check(IdentityId::C115Eq1, 2, eq1_top, |n| {
        let lhs = a(n) + 1u32;
        (1..n).find_map(|i| {
            let tail = &prefix[n as usize] - &prefix[i as usize];
            mismatch(&lhs, a(i) + tail + BigUint::from((n - i + 1) as u64))
        })
    });

    let b_oracle = run_check(IdentityId::BOracleVsRec, 0, top, |n| {
        mismatch(
            &oracle_b[n as usize],
            b.get(n as usize).expect("in range").clone(),
        )
    });

    let b_even = run_check(IdentityId::BEven, 1, top, |n| {
        let term = b.get(n as usize).expect("in range");
        term.is_odd().then(|| (BigUint::zero(), term % 2u32))
    });

    Ok(vec![
        def_vs_closed,
        prop1,
        prop2,
        prop4,
        cor3,
        eq1,
        b_oracle,
        b_even,
    ])
}

/// Which conjecture family to verify; parsed from `"110"` or `"115"`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Conjecture {
    AndPairs,
    MaxMinSplit,
}

impl FromStr for Conjecture {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "110" => Ok(Conjecture::AndPairs),
            "115" => Ok(Conjecture::MaxMinSplit),
            other => Err(format!(
                "unknown conjecture {other:?} (expected 110 or 115)"
            )),
        }
    }
}
