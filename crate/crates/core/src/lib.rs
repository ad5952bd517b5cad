//! Exact combinatorics for separating families of bipartitions.
//!
//! A bipartition of `{1..n}` splits the ground set into at most two blocks. A
//! family of bipartitions is *separating* when every pair of elements is cut
//! by some member. This crate provides:
//!
//! * the separating / minimal-separating predicates ([`bipartition`]),
//! * the characteristic 0/1 matrix encoding and its distinct-rows criterion
//!   ([`matrix`]),
//! * the bijection between minimal separating families of size `n - 1` and
//!   labeled spanning trees, with Prüfer-sequence enumeration ([`tree`]),
//! * exact big-integer evaluation of the counts `tau(n, k)` and
//!   `sigma(n, k)` together with every connecting identity ([`counting`]),
//! * an independent brute-force oracle used to cross-validate all of the
//!   above ([`oracle`]),
//! * the `sepfam` command-line front end ([`cli`]).

pub mod bipartition;
pub mod cli;
pub mod counting;
mod error;
pub mod matrix;
pub mod oracle;
pub mod tree;

pub use bipartition::{all_bipartitions, Bipartition, BipartitionTuple, FamilyOfBipartitions, GroundSet};
pub use counting::{CountValue, Counter, IdentityCheck, StirlingKind, StirlingTable};
pub use error::{Error, Result};
pub use matrix::CharMatrix;
pub use oracle::{CheckOutcome, ValidationReport};
pub use tree::{LabeledGraph, LabeledTree, PruferSequence};
