//! Separators of permutations.
//!
//! An entry of a permutation is a separator when deleting it brings two
//! consecutive values next to each other, creating a new bond. This crate
//! provides the permutation type and its constructions, separator detection,
//! marked structures, bivariate generating functions for the bond and
//! separator distributions, and exhaustive enumeration used as an oracle.
//!
//! Everything here is `no_std` with `alloc`; IO and the command line live in
//! the `sepstat` crate.

#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod enumerate;
pub mod gf;
pub mod numbers;
pub mod perm;
pub mod separators;

pub use enumerate::{
    distribution, expectation_empirical, expectation_formula, iterate_sn, max_separator_perms,
    separator_free_count, sweep, DistTable, EnumError, ExpectationKind, Histograms, StatKind,
};
pub use gf::{bond_gf, bond_marked_gf, vertical_marked_gf, vertical_sep_gf, BiSeries, MarkerPoly};
pub use numbers::Rational;
pub use perm::{PermError, Permutation, Run, RunDirection, Word};
pub use separators::{is_separator_free, sep_count, separator_report, SeparatorReport};
