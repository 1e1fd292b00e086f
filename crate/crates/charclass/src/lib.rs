//! Symbolic characteristic-class calculus in truncated graded rings.
//!
//! The crate computes total Chern classes of bundle expressions, Harris-Tu
//! determinantal classes of symmetric degeneracy loci, double Schubert
//! polynomials for flagged loci, and checks (or solves) generalized
//! Riemann-Hurwitz pairing identities against concrete numbers. All
//! arithmetic is exact over the rationals.

pub mod bundle;
pub mod catalog;
pub mod cli;
pub mod degeneracy;
pub mod parse;
pub mod rh;
pub mod ring;
pub mod schubert;

pub use ring::{GradedClass, Rat, RingError, RingSpec};
