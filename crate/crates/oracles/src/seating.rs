//! Ménage seatings, by exhaustive enumeration.

use std::fmt;

use num_bigint::BigInt;

use crate::error::{check_bounds, OracleError, Result};
use crate::permutation::next_permutation;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Font {
    X,
    Y,
}

/// One partner of a couple: the couple's letter in one of the two fonts.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Person {
    pub couple: usize,
    pub font: Font,
}

impl Person {
    fn from_index(index: usize) -> Self {
        let font = if index.is_multiple_of(2) { Font::X } else { Font::Y };
        Self {
            couple: index / 2,
            font,
        }
    }
}

impl fmt::Display for Person {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{:?})", self.couple, self.font)
    }
}

/// `2n` persons on `2n` labeled seats around a table; seat `2n - 1` is next
/// to seat `0`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Seating {
    seats: Vec<Person>,
}

impl Seating {
    pub fn new(seats: Vec<Person>) -> Result<Self> {
        if !seats.len().is_multiple_of(2) {
            return Err(OracleError::InvalidSeating {
                reason: "odd number of seats",
            });
        }
        let n = seats.len() / 2;
        let mut seen = vec![false; seats.len()];
        for p in &seats {
            let slot = 2 * p.couple + usize::from(p.font == Font::Y);
            if p.couple >= n || std::mem::replace(&mut seen[slot], true) {
                return Err(OracleError::InvalidSeating {
                    reason: "every couple and font must appear exactly once",
                });
            }
        }
        Ok(Self { seats })
    }

    pub fn seats(&self) -> &[Person] {
        &self.seats
    }

    pub fn couples(&self) -> usize {
        self.seats.len() / 2
    }
}

impl fmt::Display for Seating {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, p) in self.seats.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "]")
    }
}

fn compatible(a: Person, b: Person) -> bool {
    a.font != b.font && a.couple != b.couple
}

/// True iff every pair of neighbouring seats holds different fonts and
/// different couples.
pub fn is_valid_menage_seating(s: &Seating) -> bool {
    let k = s.seats.len();
    (0..k).all(|i| compatible(s.seats[i], s.seats[(i + 1) % k]))
}

/// All seatings of `n` couples: the `(2n)!` orders of the persons, with
/// persons ordered by couple and then font.
#[derive(Debug, Clone)]
pub struct Seatings {
    current: Option<Vec<usize>>,
}

pub fn seatings(n: u64) -> Result<Seatings> {
    check_bounds("n", n, 2, 5)?;
    Ok(Seatings {
        current: Some((0..2 * n as usize).collect()),
    })
}

impl Iterator for Seatings {
    type Item = Seating;

    fn next(&mut self) -> Option<Seating> {
        let current = self.current.as_mut()?;
        let seating = Seating {
            seats: current.iter().map(|&i| Person::from_index(i)).collect(),
        };
        if !next_permutation(current) {
            self.current = None;
        }
        Some(seating)
    }
}

/// Counts valid ménage seatings of `n` couples on labeled seats by visiting
/// every assignment of persons to seats.
pub fn brute_menage(n: u64) -> Result<BigInt> {
    check_bounds("n", n, 2, 5)?;
    // Person 2c is couple c in X, 2c + 1 is couple c in Y.
    let ok = |a: usize, b: usize| (a ^ b) & 1 == 1 && a / 2 != b / 2;
    let mut order: Vec<usize> = (0..2 * n as usize).collect();
    let k = order.len();
    let mut count: u64 = 0;
    loop {
        if (0..k).all(|i| ok(order[i], order[(i + 1) % k])) {
            count += 1;
        }
        if !next_permutation(&mut order) {
            break;
        }
    }
    Ok(BigInt::from(count))
}
