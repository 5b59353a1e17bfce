//! Counting ordered pairs `(i, j)` with `0 <= i, j < n` and `i & j != 0`.
//!
//! Three independent routes are provided:
//!
//! * [`and_pairs_bruteforce`] enumerates the `n * n` pairs directly;
//! * [`and_pairs_recursive`] evaluates the halving recurrence
//!   `a(2k) = 3 a(k) + k^2`, `a(2k+1) = a(k) + 2 a(k+1) + k^2 - 1`
//!   with `a(0) = a(1) = 0`;
//! * [`zero_and_pairs_digitdp`] counts the complement (pairs with
//!   `i & j == 0`) by a digit DP over the bits of `n`, so that
//!   `a(n) = n^2 - zero(n)`.

use std::collections::{BTreeSet, HashMap};

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::SeqValue;

/// Cache of recurrence values keyed by index.
///
/// A fresh memo after one call to [`and_pairs_recursive`] holds at most
/// `2 * bits(n) + 4` entries: every level of the halving touches at most the
/// two adjacent indices `floor(n / 2^l)` and `floor(n / 2^l) + 1`.
#[derive(Debug, Default, Clone)]
pub struct RecursionMemo {
    entries: HashMap<BigUint, SeqValue>,
}

impl RecursionMemo {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, index: &BigUint) -> Option<&SeqValue> {
        self.entries.get(index)
    }

    /// The bound on [`len`](Self::len) after evaluating `n` with a fresh memo.
    pub fn bound_for(n: &BigUint) -> u64 {
        2 * n.bits() + 4
    }
}

/// Counts of the pairs in `S_n` split by the parity of each coordinate.
///
/// `ee` holds pairs with both coordinates even, `eo` first even and second
/// odd, and so on.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ParitySplit {
    pub ee: SeqValue,
    pub eo: SeqValue,
    pub oe: SeqValue,
    pub oo: SeqValue,
}

impl ParitySplit {
    pub fn total(&self) -> SeqValue {
        &self.ee + &self.eo + &self.oe + &self.oo
    }
}

fn check_guard(n: usize, guard: usize) -> Result<()> {
    if n > guard {
        return Err(Error::guard("AND-pair brute force", n, guard));
    }
    Ok(())
}

/// `|{(i, j) : 0 <= i, j < n, i & j != 0}|` by direct enumeration.
pub fn and_pairs_bruteforce(n: usize, guard: usize) -> Result<SeqValue> {
    check_guard(n, guard)?;
    let mut count: u64 = 0;
    for i in 0..n {
        for j in 0..n {
            if i & j != 0 {
                count += 1;
            }
        }
    }
    Ok(BigUint::from(count))
}

/// Brute-force values `a(0), ..., a(n_max)` from a single enumeration of the
/// square `[0, n_max)^2`.
///
/// Each qualifying pair is charged to `max(i, j)`; `a(n)` is then the prefix
/// sum of the charges below `n`.
pub fn and_pairs_bruteforce_prefix(n_max: usize, guard: usize) -> Result<Vec<SeqValue>> {
    check_guard(n_max, guard)?;
    let mut by_max = vec![0u64; n_max.max(1)];
    for i in 0..n_max {
        for j in 0..n_max {
            if i & j != 0 {
                by_max[i.max(j)] += 1;
            }
        }
    }
    let mut out = Vec::with_capacity(n_max + 1);
    let mut acc = 0u64;
    out.push(BigUint::zero());
    for &c in by_max.iter().take(n_max) {
        acc += c;
        out.push(BigUint::from(acc));
    }
    Ok(out)
}

/// Classifies every pair of `S_n` by coordinate parity.
pub fn parity_split(n: usize, guard: usize) -> Result<ParitySplit> {
    check_guard(n, guard)?;
    let mut counts = [[0u64; 2]; 2];
    for i in 0..n {
        for j in 0..n {
            if i & j != 0 {
                counts[i & 1][j & 1] += 1;
            }
        }
    }
    Ok(split_from_counts(&counts))
}

/// Parity splits for every `n` in `0..=n_max` from one enumeration, charging
/// each pair to `max(i, j)` as in [`and_pairs_bruteforce_prefix`].
pub fn parity_split_prefix(n_max: usize, guard: usize) -> Result<Vec<ParitySplit>> {
    check_guard(n_max, guard)?;
    let mut by_max = vec![[[0u64; 2]; 2]; n_max];
    for i in 0..n_max {
        for j in 0..n_max {
            if i & j != 0 {
                by_max[i.max(j)][i & 1][j & 1] += 1;
            }
        }
    }
    let mut acc = [[0u64; 2]; 2];
    let mut out = Vec::with_capacity(n_max + 1);
    out.push(ParitySplit::default());
    for charges in &by_max {
        for p in 0..2 {
            for q in 0..2 {
                acc[p][q] += charges[p][q];
            }
        }
        out.push(split_from_counts(&acc));
    }
    Ok(out)
}

fn split_from_counts(c: &[[u64; 2]; 2]) -> ParitySplit {
    ParitySplit {
        ee: c[0][0].into(),
        eo: c[0][1].into(),
        oe: c[1][0].into(),
        oo: c[1][1].into(),
    }
}

/// Evaluates `a(n)` through the halving recurrence, reusing and extending
/// `memo`.
///
/// Runs bottom-up over the levels `floor(n / 2^l)`, so the depth of `n` is
/// not limited by the call stack.
pub fn and_pairs_recursive(n: &BigUint, memo: &mut RecursionMemo) -> SeqValue {
    if let Some(v) = memo.get(n) {
        return v.clone();
    }

    // Indices needed at each level, from n down to the base cases.
    let mut levels: Vec<BTreeSet<BigUint>> = vec![BTreeSet::from([n.clone()])];
    loop {
        let mut next = BTreeSet::new();
        for m in levels.last().expect("nonempty") {
            if *m <= BigUint::one() || memo.get(m).is_some() {
                continue;
            }
            let half: BigUint = m >> 1u32;
            if m.bit(0) {
                next.insert(&half + 1u32);
            }
            next.insert(half);
        }
        if next.is_empty() {
            break;
        }
        levels.push(next);
    }

    for level in levels.iter().rev() {
        for m in level {
            if memo.get(m).is_some() {
                continue;
            }
            let value = if *m <= BigUint::one() {
                BigUint::zero()
            } else {
                let k: BigUint = m >> 1u32;
                let k_sq = &k * &k;
                let a_k = &memo.entries[&k];
                if m.bit(0) {
                    // k >= 1 here, so k^2 - 1 does not underflow.
                    let a_k1 = &memo.entries[&(&k + 1u32)];
                    a_k + (a_k1 << 1u32) + k_sq - 1u32
                } else {
                    a_k * 3u32 + k_sq
                }
            };
            memo.entries.insert(m.clone(), value);
        }
    }
    memo.entries[n].clone()
}

/// Convenience wrapper around [`and_pairs_recursive`] with a fresh memo.
pub fn and_pairs_fast(n: &BigUint) -> SeqValue {
    and_pairs_recursive(n, &mut RecursionMemo::new())
}

/// `|{(i, j) : 0 <= i, j < n, i & j == 0}|` by a digit DP over the bits of
/// `n`, most significant first.
///
/// State `ways[ti][tj]` counts prefixes of `(i, j)` where `ti` (`tj`) records
/// that `i` (`j`) still equals the corresponding prefix of `n`. Pairs that
/// stay tight to the end equal `n` and are excluded, which enforces the
/// strict bound.
pub fn zero_and_pairs_digitdp(n: &BigUint) -> SeqValue {
    let mut ways: [[BigUint; 2]; 2] = Default::default();
    ways[1][1] = BigUint::one();
    for bit in (0..n.bits()).rev() {
        let limit = n.bit(bit) as u8;
        let mut next: [[BigUint; 2]; 2] = Default::default();
        for (ti, row) in ways.iter().enumerate() {
            for (tj, w) in row.iter().enumerate() {
                if w.is_zero() {
                    continue;
                }
                for (x, y) in [(0u8, 0u8), (0, 1), (1, 0)] {
                    if (ti == 1 && x > limit) || (tj == 1 && y > limit) {
                        continue;
                    }
                    let nti = usize::from(ti == 1 && x == limit);
                    let ntj = usize::from(tj == 1 && y == limit);
                    next[nti][ntj] += w;
                }
            }
        }
        ways = next;
    }
    ways[0][0].clone()
}
