use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("{what} = {value} is outside the oracle bounds {min}..={max}")]
    OutOfBounds {
        what: &'static str,
        value: u64,
        min: u64,
        max: u64,
    },

    #[error("not a permutation of 0..{len}: {mapping:?}")]
    InvalidPermutation { len: usize, mapping: Vec<usize> },

    #[error("invalid domino placement on a {cycle_length}-cycle: {reason}")]
    InvalidPlacement {
        cycle_length: usize,
        reason: &'static str,
    },

    #[error("invalid seating: {reason}")]
    InvalidSeating { reason: &'static str },
}

pub type Result<T> = std::result::Result<T, OracleError>;

pub(crate) fn check_bounds(what: &'static str, value: u64, min: u64, max: u64) -> Result<()> {
    if (min..=max).contains(&value) {
        Ok(())
    } else {
        Err(OracleError::OutOfBounds {
            what,
            value,
            min,
            max,
        })
    }
}
