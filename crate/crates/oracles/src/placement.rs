//! Dominos on a cycle, by exhaustive enumeration.

use std::fmt;

use crate::error::{check_bounds, OracleError, Result};

/// `r` non-overlapping dominos on an `m`-cycle; the domino starting at `s`
/// covers cells `s` and `s + 1 mod m`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DominoPlacement {
    cycle_length: usize,
    starts: Vec<usize>,
}

impl DominoPlacement {
    pub fn new(cycle_length: usize, starts: Vec<usize>) -> Result<Self> {
        let invalid = |reason| OracleError::InvalidPlacement {
            cycle_length,
            reason,
        };
        if cycle_length < 3 {
            return Err(invalid("cycle length must be at least 3"));
        }
        if starts.iter().any(|&s| s >= cycle_length) {
            return Err(invalid("start outside the cycle"));
        }
        if starts.windows(2).any(|w| w[0] >= w[1]) {
            return Err(invalid("starts must be strictly increasing"));
        }
        let placement = Self {
            cycle_length,
            starts,
        };
        if !placement.is_non_overlapping() {
            return Err(invalid("dominos overlap"));
        }
        Ok(placement)
    }

    pub fn cycle_length(&self) -> usize {
        self.cycle_length
    }

    pub fn starts(&self) -> &[usize] {
        &self.starts
    }

    /// Covered cells, two per domino, in domino order.
    pub fn covered_cells(&self) -> impl Iterator<Item = usize> + '_ {
        self.starts
            .iter()
            .flat_map(move |&s| [s, (s + 1) % self.cycle_length])
    }

    fn is_non_overlapping(&self) -> bool {
        let mut used = vec![false; self.cycle_length];
        self.covered_cells()
            .all(|c| !std::mem::replace(&mut used[c], true))
    }
}

impl fmt::Display for DominoPlacement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, s) in self.starts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{s}")?;
        }
        write!(f, "]")
    }
}

/// Every placement of `r` dominos on an `m`-cycle, in lexicographic order of
/// the start lists.
///
/// Walks all `r`-subsets of the `m` possible starts and keeps the ones whose
/// dominos are pairwise disjoint.
#[derive(Debug, Clone)]
pub struct DominoPlacements {
    cycle_length: usize,
    subset: Option<Vec<usize>>,
}

pub fn enumerate_domino_placements(m: u64, r: u64) -> Result<DominoPlacements> {
    check_bounds("m", m, 3, 20)?;
    let (m, r) = (m as usize, r as usize);
    let subset = (r <= m).then(|| (0..r).collect());
    Ok(DominoPlacements {
        cycle_length: m,
        subset,
    })
}

// Advances a sorted r-subset of 0..m to its lexicographic successor.
fn next_subset(subset: &mut [usize], m: usize) -> bool {
    let r = subset.len();
    let Some(i) = (0..r).rev().find(|&i| subset[i] < m - r + i) else {
        return false;
    };
    subset[i] += 1;
    for j in i + 1..r {
        subset[j] = subset[j - 1] + 1;
    }
    true
}

impl Iterator for DominoPlacements {
    type Item = DominoPlacement;

    fn next(&mut self) -> Option<DominoPlacement> {
        loop {
            let subset = self.subset.as_mut()?;
            let candidate = DominoPlacement {
                cycle_length: self.cycle_length,
                starts: subset.clone(),
            };
            if !next_subset(subset, self.cycle_length) {
                self.subset = None;
            }
            if candidate.is_non_overlapping() {
                return Some(candidate);
            }
        }
    }
}
