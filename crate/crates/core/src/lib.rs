//! Exact generalized Levenshtein distances and the isometry groups of
//! finite languages.
//!
//! * [`editdist`]: weighted edit distance over exact rationals, a brute-force
//!   oracle, Hamming distance, weight normalization, distance matrices.
//! * [`langlib`]: words, languages, subsequence order, stretching, and the
//!   bounded-length-change audit.
//! * [`constructs`]: generators for graph encodings and layered families.
//! * [`isomgroup`]: permutation groups, stabilizer chains, and the isometry
//!   solver.
//! * [`cli`]: the `levisom` command-line front end and verification reports.

pub mod cli;
pub mod constructs;
pub mod editdist;
pub mod error;
pub mod isomgroup;
pub mod langlib;
pub mod rat;

pub use error::{Error, Result};
pub use rat::Rat;
