//! Term-by-term recurrences for the Touchard sum at a fixed `n`.
//!
//! With `m = 2n`, consecutive domino counts and tail factorials satisfy
//!
//! ```text
//! d(r+1)      = d(r) * (m - 2r)(m - 2r - 1) / ((r + 1)(m - r - 1))
//! (n - r - 1)! = (n - r)! / (n - r)
//! ```
//!
//! so every term follows from its predecessor with a couple of word-sized
//! multiplications and divisions. Each division is checked: a remainder is
//! reported as [`Error::InexactDivision`].

use num_bigint::BigInt;
use num_traits::One;

use crate::arith::{exact_div, factorial_counted, OpCounts};
use crate::error::{Error, Result};
use crate::ExactInteger;

/// One step of [`IncrementalTerms`]: the domino count `d(r)` on a `2n`-cycle
/// and the tail factorial `(n - r)!`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TermFactors {
    pub r: u64,
    pub domino_count: ExactInteger,
    pub tail_factorial: ExactInteger,
}

/// Walks `r = 0..=n`, updating `d(r)` and `(n - r)!` through their
/// recurrences rather than evaluating either from scratch.
#[derive(Debug, Clone)]
pub struct IncrementalTerms {
    n: u64,
    next_r: u64,
    domino_count: ExactInteger,
    tail_factorial: ExactInteger,
    failed: bool,
}

impl IncrementalTerms {
    pub fn new(n: u64) -> Result<Self> {
        if n < 2 {
            return Err(Error::TooFewCouples { n });
        }
        Ok(Self {
            n,
            next_r: 0,
            domino_count: BigInt::one(),
            tail_factorial: factorial_counted(n, &mut OpCounts::default()),
            failed: false,
        })
    }

    fn advance(&mut self) -> Result<()> {
        let m = 2 * self.n;
        let r = self.next_r;
        let grown = &self.domino_count * ((m - 2 * r) * (m - 2 * r - 1));
        self.domino_count = exact_div(&grown, (r + 1) * (m - r - 1), "domino count recurrence")?;
        self.tail_factorial = exact_div(
            &self.tail_factorial,
            self.n - r,
            "tail factorial recurrence",
        )?;
        Ok(())
    }
}

impl Iterator for IncrementalTerms {
    type Item = Result<TermFactors>;

    fn next(&mut self) -> Option<Self::Item> {
        if self.failed || self.next_r > self.n {
            return None;
        }
        let item = TermFactors {
            r: self.next_r,
            domino_count: self.domino_count.clone(),
            tail_factorial: self.tail_factorial.clone(),
        };
        if self.next_r < self.n {
            if let Err(e) = self.advance() {
                self.failed = true;
                return Some(Err(e));
            }
        }
        self.next_r += 1;
        Some(Ok(item))
    }
}

/// Touchard sum for `n >= 2` carrying only the term magnitude
/// `|t(r)| = d(r) * (n - r)!` between steps:
///
/// ```text
/// |t(r+1)| = |t(r)| * (2n - 2r)(2n - 2r - 1) / ((r + 1)(2n - r - 1)(n - r))
/// ```
///
/// Every step is one big-by-word multiplication and one big-by-word division.
pub(crate) fn touchard_sum(n: u64, ops: &mut OpCounts) -> Result<ExactInteger> {
    debug_assert!(n >= 2);
    let m = 2 * n;
    let mut magnitude = factorial_counted(n, ops);
    let mut total = magnitude.clone();
    for r in 0..n {
        magnitude *= (m - 2 * r) * (m - 2 * r - 1);
        ops.multiplications += 1;
        let divisor = (r + 1)
            .checked_mul(m - r - 1)
            .and_then(|d| d.checked_mul(n - r));
        magnitude = match divisor {
            Some(d) => exact_div(&magnitude, d, "touchard term recurrence")?,
            // The three-factor divisor no longer fits a word; split it.
            None => {
                let partial = exact_div(
                    &magnitude,
                    (r + 1) * (m - r - 1),
                    "touchard term recurrence",
                )?;
                exact_div(&partial, n - r, "touchard term recurrence")?
            }
        };
        ops.divisions += 1;
        if r % 2 == 0 {
            total -= &magnitude;
        } else {
            total += &magnitude;
        }
        ops.additions += 1;
    }
    Ok(total)
}
