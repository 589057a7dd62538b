//! Combinatorics of unramified nilpotent orbits for split groups of type
//! A, B, C, D and G2.
//!
//! The crate is layered bottom-up:
//!
//! * [`rootdata`]: root systems, affine simple roots, Weyl groups, alcove symmetries
//! * [`partitions`]: partitions, collapses and the dominance order
//! * [`orbits`]: nilpotent orbits, weighted Dynkin diagrams, Lusztig–Spaltenstein
//!   and Barbasch–Vogan duality
//! * [`weylrep`]: Weyl group characters, symbols, families, Springer
//!   correspondence and truncated induction
//! * [`abc`]: affine Bala–Carter pairs and their equivalence
//! * [`duality`]: the Sommers dual and the invariant pairs it produces
//! * [`wavefront`]: wavefront sets of spherical Arthur representations and of
//!   modules described by restriction data
//!
//! All arithmetic is exact. Tables that are expensive to build are memoised
//! per type and shared behind `Arc`s, so every public function is safe to call
//! from several threads.

pub mod abc;
pub mod duality;
pub mod error;
pub mod linalg;
pub mod orbits;
pub mod partitions;
pub mod rootdata;
pub mod wavefront;
pub mod weylrep;

mod memo;

pub use error::{Error, Result};

/// Exact scalar used for every coordinate in `V = X_* ⊗ R`.
pub type Rational = num_rational::Ratio<i64>;
/// A vector of [`Rational`]s.
pub type QVector = Vec<Rational>;
/// A dense matrix of [`Rational`]s.
pub type QMatrix = linalg::Matrix<Rational>;
