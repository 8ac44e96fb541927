//! Alternating descents of permutations: exact generating polynomials,
//! their recurrences, gamma expansions and cyclotomic divisibility.

pub mod check;
pub mod cli;
pub mod divisibility;
pub mod error;
pub mod gamma;
pub mod oracle;
pub mod perm;
pub mod poly;
pub mod recurrences;

pub use check::{Check, Witness};
pub use error::{Error, Result};
pub use oracle::{Oracle, Stat, StatMultiset};
pub use perm::Permutation;
pub use poly::{BiPolyTQ, IntPoly};
