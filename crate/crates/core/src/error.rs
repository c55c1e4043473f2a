use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("cycle length m = {m} is not supported: the domino formulas require m >= 3")]
    CycleTooShort { m: u64 },

    #[error("couple count n = {n} is not supported: the formulas require n >= 2")]
    TooFewCouples { n: u64 },

    #[error("term index r = {r} is outside 0..={n}")]
    TermIndexOutOfRange { n: u64, r: u64 },

    #[error("domino count r = {r} is outside 1..={max} for a cycle of length {m}")]
    DominoCountOutOfRange { m: u64, r: u64, max: u64 },

    /// A division that must be exact left a remainder. This is never
    /// expected and indicates a broken formula or recurrence.
    #[error("division by {divisor} left a nonzero remainder in {context}")]
    InexactDivision { context: &'static str, divisor: u64 },
}

pub type Result<T> = std::result::Result<T, Error>;
