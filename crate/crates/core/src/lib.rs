//! Exact computation and cross-verification of two integer sequence
//! families:
//!
//! * the number of ordered pairs `0 <= i, j < n` with `i & j != 0`
//!   ([`and_pairs`]), and
//! * the max/min split sequence `a_n = M_n + m_n` together with the binary
//!   partition numbers that give its closed form ([`maxmin`],
//!   [`binary_partitions`]).
//!
//! Every quantity has a slow oracle and a fast path; [`verifier`] runs the
//! known identities over ranges and [`oeis`] checks prefixes against OEIS
//! b-files.

pub mod and_pairs;
pub mod binary_partitions;
pub mod cli;
pub mod error;
pub mod guard;
pub mod maxmin;
pub mod oeis;
pub mod verifier;

pub use error::{Error, Result};
pub use guard::Guards;

/// Value type of every sequence term: an exact nonnegative integer.
pub type SeqValue = num_bigint::BigUint;
