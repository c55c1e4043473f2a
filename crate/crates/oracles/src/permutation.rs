//! Permutations of `0..n` and the discordance oracle.

use std::fmt;

use num_bigint::BigInt;

use crate::error::{check_bounds, OracleError, Result};

/// A bijection on `0..n`, stored as its one-line mapping.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    mapping: Vec<usize>,
}

impl Permutation {
    pub fn new(mapping: Vec<usize>) -> Result<Self> {
        let n = mapping.len();
        let mut seen = vec![false; n];
        for &v in &mapping {
            if v >= n || std::mem::replace(&mut seen[v], true) {
                return Err(OracleError::InvalidPermutation { len: n, mapping });
            }
        }
        Ok(Self { mapping })
    }

    pub fn identity(n: usize) -> Self {
        Self {
            mapping: (0..n).collect(),
        }
    }

    /// The cyclic shift `i -> i + 1 mod n`.
    pub fn shift(n: usize) -> Self {
        Self {
            mapping: (0..n).map(|i| (i + 1) % n).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.mapping.len()
    }

    pub fn is_empty(&self) -> bool {
        self.mapping.is_empty()
    }

    pub fn mapping(&self) -> &[usize] {
        &self.mapping
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, v) in self.mapping.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "]")
    }
}

/// Rearranges `items` into the next permutation in lexicographic order.
/// Returns `false` (leaving `items` untouched) when it is already the last one.
pub fn next_permutation<T: Ord>(items: &mut [T]) -> bool {
    let Some(pivot) = items.windows(2).rposition(|w| w[0] < w[1]) else {
        return false;
    };
    let successor = items.iter().rposition(|x| *x > items[pivot]).unwrap();
    items.swap(pivot, successor);
    items[pivot + 1..].reverse();
    true
}

/// All permutations of `0..n` in lexicographic order.
#[derive(Debug, Clone)]
pub struct Permutations {
    current: Option<Vec<usize>>,
}

pub fn permutations(n: usize) -> Permutations {
    Permutations {
        current: Some((0..n).collect()),
    }
}

impl Iterator for Permutations {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        let current = self.current.as_mut()?;
        let out = Permutation {
            mapping: current.clone(),
        };
        if !next_permutation(current) {
            self.current = None;
        }
        Some(out)
    }
}

fn discordant(mapping: &[usize]) -> bool {
    let n = mapping.len();
    mapping
        .iter()
        .enumerate()
        .all(|(i, &v)| v != i && v != (i + 1) % n)
}

/// True iff `p` disagrees with both the identity and the cyclic shift at
/// every position.
pub fn is_discordant(p: &Permutation) -> bool {
    discordant(&p.mapping)
}

/// Fixed points plus agreements with the cyclic shift.
///
/// For `n >= 2` each position satisfies at most one of its two constraints,
/// so the result lies in `0..=n`.
pub fn hit_count(p: &Permutation) -> usize {
    hits(&p.mapping)
}

fn hits(mapping: &[usize]) -> usize {
    let n = mapping.len();
    mapping
        .iter()
        .enumerate()
        .map(|(i, &v)| usize::from(v == i) + usize::from(v == (i + 1) % n))
        .sum()
}

/// Counts discordant permutations of `0..n` by visiting all `n!` of them.
pub fn brute_tait(n: u64) -> Result<BigInt> {
    check_bounds("n", n, 1, 9)?;
    let mut mapping: Vec<usize> = (0..n as usize).collect();
    let mut count: u64 = 0;
    loop {
        if discordant(&mapping) {
            count += 1;
        }
        if !next_permutation(&mut mapping) {
            break;
        }
    }
    Ok(BigInt::from(count))
}

fn small_binomial(a: u64, b: u64) -> u64 {
    if b > a {
        return 0;
    }
    (0..b).fold(1, |acc, i| acc * (a - i) / (i + 1))
}

/// `sum over p of C(hit_count(p), r)`: each permutation is counted once for
/// every `r`-subset of the constraints it satisfies.
pub fn ie_term_sum(n: u64, r: u64) -> Result<BigInt> {
    check_bounds("n", n, 2, 8)?;
    check_bounds("r", r, 0, n)?;
    let mut mapping: Vec<usize> = (0..n as usize).collect();
    let mut total: u64 = 0;
    loop {
        total += small_binomial(hits(&mapping) as u64, r);
        if !next_permutation(&mut mapping) {
            break;
        }
    }
    Ok(BigInt::from(total))
}
