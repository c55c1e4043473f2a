//! The Touchard sum, its per-term breakdown, and the ménage count.
//!
//! For `n >= 2` couples the number of permutations of `0..n` that disagree
//! everywhere with both the identity and the cyclic shift `i -> i + 1` is
//!
//! ```text
//! U(n) = sum_{r=0}^{n} (-1)^r * d(r) * (n - r)!,   d(r) = 2n / (2n - r) * C(2n - r, r)
//! ```
//!
//! and the number of labeled ménage seatings is `2 * n! * U(n)`: two choices
//! of which seat parity holds the X-letters, `n!` orderings of them, then
//! `U(n)` ways to place the Y-letters.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::arith::{factorial, factorial_counted, OpCounts};
use crate::domino::domino_count_counted;
use crate::error::{Error, Result};
use crate::incremental::{touchard_sum, IncrementalTerms};
use crate::ExactInteger;

pub(crate) fn check_couples(n: u64) -> Result<()> {
    if n < 2 {
        Err(Error::TooFewCouples { n })
    } else {
        Ok(())
    }
}

fn sign_of(r: u64) -> i8 {
    if r.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// One summand of the Touchard sum.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BreakdownTerm {
    pub r: u64,
    pub domino_count: ExactInteger,
    pub sign: i8,
    pub tail_factorial: ExactInteger,
    pub term_value: ExactInteger,
}

/// The Touchard sum for one `n`, term by term, in increasing `r`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TouchardBreakdown {
    pub n: u64,
    pub terms: Vec<BreakdownTerm>,
    pub total: ExactInteger,
}

/// How [`evaluate`] computes `U(n)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EvaluationPath {
    /// Term magnitudes via the word-sized recurrence between neighbours.
    Incremental,
    /// Every term from scratch through `factorial` and `binomial`.
    Direct,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Evaluation {
    pub value: ExactInteger,
    pub ops: OpCounts,
}

fn touchard_term_counted(n: u64, r: u64, ops: &mut OpCounts) -> Result<ExactInteger> {
    check_couples(n)?;
    if r > n {
        return Err(Error::TermIndexOutOfRange { n, r });
    }
    let d = domino_count_counted(2 * n, r, ops)?;
    let tail = factorial_counted(n - r, ops);
    ops.multiplications += 1;
    let magnitude = d * tail;
    Ok(if sign_of(r) > 0 {
        magnitude
    } else {
        -magnitude
    })
}

/// `(-1)^r * d(r) * (n - r)!`, evaluated directly.
pub fn touchard_term(n: u64, r: u64) -> Result<ExactInteger> {
    touchard_term_counted(n, r, &mut OpCounts::default())
}

/// Evaluates `U(n)` along the chosen path, counting big-integer operations.
pub fn evaluate(n: u64, path: EvaluationPath) -> Result<Evaluation> {
    check_couples(n)?;
    let mut ops = OpCounts::default();
    let value = match path {
        EvaluationPath::Incremental => touchard_sum(n, &mut ops)?,
        EvaluationPath::Direct => {
            let mut total = BigInt::zero();
            for r in 0..=n {
                total += touchard_term_counted(n, r, &mut ops)?;
                ops.additions += 1;
            }
            total
        }
    };
    Ok(Evaluation { value, ops })
}

/// Number of permutations of `0..n` discordant with the identity and the
/// cyclic shift. Rejects `n < 2`: at `n = 1` the sum gives `-1`, not `0`.
pub fn tait_count(n: u64) -> Result<ExactInteger> {
    evaluate(n, EvaluationPath::Incremental).map(|e| e.value)
}

/// [`tait_count`] summed term by term from `factorial` and `binomial`.
pub fn tait_count_direct(n: u64) -> Result<ExactInteger> {
    evaluate(n, EvaluationPath::Direct).map(|e| e.value)
}

/// [`tait_count`] together with every summand.
pub fn tait_breakdown(n: u64) -> Result<TouchardBreakdown> {
    let mut terms = Vec::with_capacity(n as usize + 1);
    let mut total = BigInt::zero();
    for step in IncrementalTerms::new(n)? {
        let step = step?;
        let sign = sign_of(step.r);
        let magnitude = &step.domino_count * &step.tail_factorial;
        let term_value = if sign > 0 { magnitude } else { -magnitude };
        total += &term_value;
        terms.push(BreakdownTerm {
            r: step.r,
            domino_count: step.domino_count,
            sign,
            tail_factorial: step.tail_factorial,
            term_value,
        });
    }
    Ok(TouchardBreakdown { n, terms, total })
}

/// Labeled ménage seatings of `n` couples on `2n` cyclic seats: `2 * n! * U(n)`.
pub fn menage_count(n: u64) -> Result<ExactInteger> {
    let tait = tait_count(n)?;
    Ok(factorial(n) * tait * 2)
}
