//! Exact-arithmetic workbench for braided Hopf algebras in bicharacter-braided
//! categories: Nichols algebras, small and generic quantum groups, braided
//! Drinfeld doubles, bosonizations and Yetter–Drinfeld modules, with
//! mechanical verification of their axioms, isomorphisms and module
//! conversions.
//!
//! All arithmetic is exact: rationals, rational functions in q, or cyclotomic
//! fields Q(ε). There is no floating point anywhere in the crate.

pub mod bichar;
pub mod cartan;
pub mod gmap;
pub mod grading;
pub mod linalg;
pub mod hopf;
pub mod nichols;
pub mod pairing;
pub mod report;
pub mod scalar;
pub mod space;
pub mod words;

/// Seed used by every sampled check when none is supplied.
pub const DEFAULT_SEED: u64 = 424242;
