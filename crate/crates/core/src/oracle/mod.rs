//! Brute-force combinatorial ground truth: coloured-hill Dyck paths, ballot
//! words with the hill-replacement bijection, and the ternary words counted
//! by `g_4`.
//!
//! Everything here enumerates objects one by one and never touches the
//! closed forms or the transform machinery, so it can be used to check them.

mod ballot;
mod dyck;
mod ternary;

pub use ballot::{
    ballot_to_dyck, ballot_words, count_ballot, dyck_to_ballot, two_colored_paths, BallotWord, MAX_BALLOT_LEN,
};
pub use dyck::{
    colorings, count_colored, count_total, dyck_paths, enumerate_dyck, hill_count, ColoredDyckPath, DyckPath,
    DyckPaths, HillHistogram, Step, MAX_SEMILENGTH,
};
pub use ternary::{count_ternary_g4, ternary_histogram, validate_ternary_g4, TernaryWord, MAX_TERNARY_LEN};
