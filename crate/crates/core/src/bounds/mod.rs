//! Nonexistence certificates and realizable lengths.

pub mod lengths;
pub mod lp;

pub use lengths::{eq1_bound, frobenius, length_closure, pd21_predicate, theorem3_bound, LengthSet};
pub use lp::{exclude_length, moment_lp, LpOutcome, MomentOptions, MomentSystem};
