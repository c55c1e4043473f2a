//! Exact evaluation of the ménage numbers.
//!
//! Everything is computed with arbitrary-precision integers:
//!
//! * [`factorial`] and [`binomial`];
//! * [`domino_count`] and [`domino_count_alt`], the number of ways to lay
//!   `r` non-overlapping dominos on an `m`-cycle;
//! * [`touchard_term`], [`tait_count`] and [`tait_breakdown`] for the number of
//!   permutations discordant with the identity and the cyclic shift;
//! * [`menage_count`], the number of labeled ménage seatings;
//! * [`tait_sequence`] for long runs of `n`.

mod arith;
mod domino;
mod error;
mod incremental;
mod sequence;
mod touchard;

pub use arith::{binomial, factorial, OpCounts};
pub use domino::{domino_count, domino_count_alt};
pub use error::{Error, Result};
pub use incremental::{IncrementalTerms, TermFactors};
pub use sequence::{tait_sequence, TaitSequence};
pub use touchard::{
    evaluate, menage_count, tait_breakdown, tait_count, tait_count_direct, touchard_term,
    BreakdownTerm, Evaluation, EvaluationPath, TouchardBreakdown,
};

/// Arbitrary-precision signed integer used for every count.
pub type ExactInteger = num_bigint::BigInt;
