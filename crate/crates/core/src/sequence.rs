use crate::arith::OpCounts;
use crate::error::Result;
use crate::incremental::touchard_sum;
use crate::touchard::check_couples;
use crate::ExactInteger;

/// Lazy stream of `(n, tait_count(n))` for `n = 2..=n_max`.
///
/// Each value is computed independently through the incremental term
/// recurrence when it is pulled, so skipping ahead with `nth` or `last`
/// does not pay for the skipped entries.
#[derive(Debug, Clone)]
pub struct TaitSequence {
    front: u64,
    back: u64,
}

/// Stream of Tait counts for `n = 2..=n_max`. Rejects `n_max < 2`.
pub fn tait_sequence(n_max: u64) -> Result<TaitSequence> {
    check_couples(n_max)?;
    Ok(TaitSequence {
        front: 2,
        back: n_max + 1,
    })
}

fn entry(n: u64) -> Result<(u64, ExactInteger)> {
    Ok((n, touchard_sum(n, &mut OpCounts::default())?))
}

impl Iterator for TaitSequence {
    type Item = Result<(u64, ExactInteger)>;

    fn next(&mut self) -> Option<Self::Item> {
        if self.front >= self.back {
            return None;
        }
        let n = self.front;
        self.front += 1;
        Some(entry(n))
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let len = (self.back - self.front) as usize;
        (len, Some(len))
    }

    fn nth(&mut self, skip: usize) -> Option<Self::Item> {
        self.front = self.front.saturating_add(skip as u64).min(self.back);
        self.next()
    }

    fn last(mut self) -> Option<Self::Item> {
        self.next_back()
    }
}

impl DoubleEndedIterator for TaitSequence {
    fn next_back(&mut self) -> Option<Self::Item> {
        if self.front >= self.back {
            return None;
        }
        self.back -= 1;
        Some(entry(self.back))
    }
}

impl ExactSizeIterator for TaitSequence {}
