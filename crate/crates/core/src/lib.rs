//! Exact-arithmetic engine for symmetric-group character computations.
//!
//! The crate evaluates the character identity
//!
//! ```text
//! Lambda_n^{k,l}(nu) = prod_i (k + (-1)^{nu_i - 1} l)
//! ```
//!
//! by three independent routes and provides the combinatorial machinery
//! each route needs:
//!
//! - [`combinatorics`]: partitions, compositions, bicompositions, class sizes
//! - [`diagrams`]: Young/skew diagrams, line components, border strips
//! - [`characters`]: Murnaghan-Nakayama evaluation of irreducible and
//!   line-diagram skew characters, induced-character oracle, decomposition
//! - [`tableaux`]: brute-force semistandard (k,l)-tableau enumeration
//! - [`regev`]: the headline sums, the closed-form product, and the
//!   Pieri-rule consistency check
//!
//! All values are exact integers; arithmetic is checked and overflow is
//! reported as [`Error::Overflow`] rather than wrapping. Every function is
//! pure given its inputs; the only mutable state is the memo cache inside
//! [`characters::Evaluator`], which is confined to whatever execution
//! context owns it.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod characters;
pub mod combinatorics;
pub mod diagrams;
pub mod regev;
pub mod tableaux;

mod error;

pub use error::Error;

/// Exact integer type for character values, counts, and class sizes.
///
/// 128 bits is ample for the default working range (n <= 20, enforced by
/// the CLI layer); all arithmetic on this type goes through checked
/// helpers so an out-of-range computation fails loudly.
pub type Int = i128;

pub(crate) fn checked_add(a: Int, b: Int) -> Result<Int, Error> {
    a.checked_add(b).ok_or(Error::Overflow)
}

pub(crate) fn checked_mul(a: Int, b: Int) -> Result<Int, Error> {
    a.checked_mul(b).ok_or(Error::Overflow)
}
