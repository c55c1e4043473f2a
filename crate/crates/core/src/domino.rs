//! Counts of non-overlapping dominos on a cycle.
//!
//! A domino covers two cyclically adjacent positions of an `m`-cycle. The
//! number of ways to place `r` of them without overlap is
//! `m / (m - r) * C(m - r, r)`, or equivalently `m / r * C(m - r - 1, r - 1)`
//! for `r >= 1` (fix a start, split the `m - 2r` free cells among the `r`
//! gaps, then divide out the choice of which domino came first).
//!
//! On a 2-cycle both "adjacent pairs" are the same pair, so the formulas
//! count one placement twice. Cycle lengths below 3 are rejected.

use crate::arith::{binomial_counted, exact_div, OpCounts};
use crate::error::{Error, Result};
use crate::ExactInteger;
use num_bigint::BigInt;
use num_traits::Zero;

fn check_cycle(m: u64) -> Result<()> {
    if m < 3 {
        Err(Error::CycleTooShort { m })
    } else {
        Ok(())
    }
}

/// Number of placements of `r` non-overlapping dominos on an `m`-cycle,
/// evaluated as `m * C(m - r, r) / (m - r)`. Zero when `2r > m`.
pub fn domino_count(m: u64, r: u64) -> Result<ExactInteger> {
    domino_count_counted(m, r, &mut OpCounts::default())
}

pub(crate) fn domino_count_counted(m: u64, r: u64, ops: &mut OpCounts) -> Result<ExactInteger> {
    check_cycle(m)?;
    if 2 * r > m {
        return Ok(BigInt::zero());
    }
    let scaled = binomial_counted(m - r, r as i64, ops) * m;
    ops.multiplications += 1;
    ops.divisions += 1;
    exact_div(&scaled, m - r, "domino_count")
}

/// The same count through the stars-and-bars form `m * C(m - r - 1, r - 1) / r`.
/// Only defined for `1 <= r <= m / 2`.
pub fn domino_count_alt(m: u64, r: u64) -> Result<ExactInteger> {
    check_cycle(m)?;
    if r == 0 || 2 * r > m {
        return Err(Error::DominoCountOutOfRange { m, r, max: m / 2 });
    }
    let scaled = binomial_counted(m - r - 1, r as i64 - 1, &mut OpCounts::default()) * m;
    exact_div(&scaled, r, "domino_count_alt")
}
