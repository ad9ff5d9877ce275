//! Projective divisible binary codes.
//!
//! A binary linear `[n, k]` code is *Δ-divisible* when every codeword weight
//! is a multiple of Δ, and *projective* when its generator columns are
//! pairwise distinct and nonzero. Through the columns of a generator matrix
//! such a code is the same thing as a spanning point set in `PG(k-1, 2)`,
//! and most of this crate works on that geometric side.
//!
//! Layout:
//!
//! - [`gf2`]: bit-packed matrices over GF(2) and matrix models of GF(2^m).
//! - [`codes`]: linear codes, weight distributions, duality and subcodes.
//! - [`geometry`]: point multisets, subspaces and the switching/cone/embedding
//!   constructions.
//! - [`catalog`]: named code families and fixtures.
//! - [`spreads`]: partial spreads and their hole codes.
//! - [`classify`]: canonical keys and isomorph-free classification.
//! - [`bounds`]: power-moment LP exclusion, Frobenius numbers and realizable
//!   length sets.
//! - [`textfmt`]: the plain-text matrix format shared with the CLI.

pub mod bounds;
pub mod catalog;
pub mod classify;
pub mod codes;
pub mod error;
pub mod geometry;
pub mod gf2;
pub mod spreads;
pub mod textfmt;

pub use error::{Error, Result};
