//! Brute-force counting oracles.
//!
//! Each count here is obtained by walking every candidate object and testing
//! it against its defining constraints. Nothing in this crate uses a closed
//! form, so its results can be compared against the formulas in
//! `menage-core`.

mod error;
mod permutation;
mod placement;
mod seating;

pub use error::{OracleError, Result};
pub use permutation::{
    brute_tait, hit_count, ie_term_sum, is_discordant, next_permutation, permutations, Permutation,
    Permutations,
};
pub use placement::{enumerate_domino_placements, DominoPlacement, DominoPlacements};
pub use seating::{
    brute_menage, is_valid_menage_seating, seatings, Font, Person, Seating, Seatings,
};
