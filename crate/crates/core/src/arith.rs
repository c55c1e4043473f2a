//! Exact factorials, binomials and checked division.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::ExactInteger;

/// Tally of big-integer operations performed by an evaluation.
#[derive(Debug, Default, Clone, Copy, PartialEq, Eq)]
pub struct OpCounts {
    pub multiplications: u64,
    pub divisions: u64,
    pub additions: u64,
}

impl OpCounts {
    pub fn total(&self) -> u64 {
        self.multiplications + self.divisions + self.additions
    }
}

/// Product of all integers in `lo..=hi`, by binary splitting so that the
/// big multiplications stay balanced.
pub(crate) fn range_product(lo: u64, hi: u64, ops: &mut OpCounts) -> ExactInteger {
    if lo > hi {
        return BigInt::one();
    }
    if hi - lo < 16 {
        let mut acc = BigInt::one();
        let mut word: u64 = 1;
        for k in lo..=hi {
            match word.checked_mul(k) {
                Some(w) => word = w,
                None => {
                    acc *= word;
                    ops.multiplications += 1;
                    word = k;
                }
            }
        }
        ops.multiplications += 1;
        return acc * word;
    }
    let mid = lo + (hi - lo) / 2;
    let left = range_product(lo, mid, ops);
    let right = range_product(mid + 1, hi, ops);
    ops.multiplications += 1;
    left * right
}

pub(crate) fn factorial_counted(k: u64, ops: &mut OpCounts) -> ExactInteger {
    range_product(2, k, ops)
}

pub(crate) fn binomial_counted(a: u64, b: i64, ops: &mut OpCounts) -> ExactInteger {
    if b < 0 || b as u64 > a {
        return BigInt::zero();
    }
    let b = (b as u64).min(a - b as u64);
    let numerator = range_product(a - b + 1, a, ops);
    let denominator = factorial_counted(b, ops);
    ops.divisions += 1;
    let (quotient, remainder) = numerator.div_rem(&denominator);
    debug_assert!(remainder.is_zero());
    quotient
}

/// `k!`, exactly.
pub fn factorial(k: u64) -> ExactInteger {
    factorial_counted(k, &mut OpCounts::default())
}

/// The binomial coefficient `C(a, b)`; zero when `b < 0` or `b > a`.
pub fn binomial(a: u64, b: i64) -> ExactInteger {
    binomial_counted(a, b, &mut OpCounts::default())
}

/// `value / divisor`, failing with [`Error::InexactDivision`] on a remainder.
pub(crate) fn exact_div(
    value: &ExactInteger,
    divisor: u64,
    context: &'static str,
) -> Result<ExactInteger> {
    debug_assert!(divisor != 0);
    let (quotient, remainder) = value.div_rem(&BigInt::from(divisor));
    if remainder.is_zero() {
        Ok(quotient)
    } else {
        Err(Error::InexactDivision { context, divisor })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn iterated_factorial(k: u64) -> BigInt {
        let mut acc = BigInt::one();
        for i in 1..=k {
            acc *= i;
        }
        acc
    }

    #[test]
    fn factorial_small_values() {
        assert_eq!(factorial(0), BigInt::one());
        assert_eq!(factorial(1), BigInt::one());
        assert_eq!(factorial(10), BigInt::from(3_628_800u32));
    }

    #[test]
    fn factorial_matches_iterated_product() {
        for k in 0..300 {
            assert_eq!(factorial(k), iterated_factorial(k), "k = {k}");
        }
    }

    #[test]
    fn binomial_edges() {
        assert_eq!(binomial(5, 0), BigInt::one());
        assert_eq!(binomial(5, 7), BigInt::zero());
        assert_eq!(binomial(5, -1), BigInt::zero());
        assert_eq!(binomial(0, 0), BigInt::one());
        assert_eq!(binomial(13, 3), BigInt::from(286));
    }

    #[test]
    fn binomial_matches_pascal_triangle() {
        let mut row = vec![BigInt::one()];
        for a in 0..120u64 {
            for (b, expected) in row.iter().enumerate() {
                assert_eq!(&binomial(a, b as i64), expected, "C({a}, {b})");
            }
            let mut next = vec![BigInt::one(); row.len() + 1];
            for b in 1..row.len() {
                next[b] = &row[b - 1] + &row[b];
            }
            row = next;
        }
    }

    #[test]
    fn exact_div_reports_remainder() {
        assert_eq!(exact_div(&BigInt::from(12), 4, "t"), Ok(BigInt::from(3)));
        assert_eq!(
            exact_div(&BigInt::from(13), 4, "t"),
            Err(Error::InexactDivision {
                context: "t",
                divisor: 4
            })
        );
    }
}
