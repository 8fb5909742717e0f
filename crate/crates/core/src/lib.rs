//! Exact truncated algebra for braid groups, welded braids and chord-diagram
//! algebras.
//!
//! Layers, bottom up:
//! - [`series`]: truncated noncommutative power series over the rationals
//! - [`quotient`]: graded quotients by quadratic relations
//! - [`perm`], [`semidirect`]: permutations and twisted products
//! - [`words`]: braid and welded words, with the free-group oracle
//! - [`represent`]: representations into the semidirect algebras
//! - [`associator`]: associator axioms and the degree-wise extension solver
//! - [`invariants`]: finite-type orders, the doubling map and dimension tables

pub mod associator;
pub mod error;
pub mod invariants;
pub mod linalg;
pub mod perm;
pub mod quotient;
pub mod represent;
pub mod semidirect;
pub mod series;
pub mod words;

pub use error::{Error, Result};
pub use perm::Permutation;
pub use quotient::{BasisStore, GradedQuotientBasis, RelationPreset};
pub use semidirect::SemidirectSeries;
pub use series::{Alphabet, Gen, TruncatedSeries, Word};
pub use words::{FreeGroupEndo, FreeWord, GroupRingElement, Letter, WeldedWord};

/// Exact rational numbers.
pub type Rational = num_rational::BigRational;
