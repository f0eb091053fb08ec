//! Exact computations on restricted root systems of higher-rank symmetric
//! spaces: root data with multiplicities, half-sums of maximal strongly
//! orthogonal systems, and the critical-index / homological-dimension gap
//! bounds they produce.
//!
//! Everything is computed in arbitrary-precision rational arithmetic; there
//! is no floating point anywhere in this crate. Quantities that admit both a
//! definition-level computation (summing over roots, enumerating strongly
//! orthogonal subsets) and a closed form (tabulated coefficient patterns,
//! fitted polynomials) are computed both ways and cross-checked.
//!
//! The crate is `no_std` (with `alloc`); IO, serialization and the command
//! line interface live in the companion `rootgap-cli` crate.

#![no_std]
#![forbid(unsafe_code)]
#![deny(clippy::float_arithmetic)]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod bounds;
pub mod catalog;
pub mod error;
pub mod poly;
pub mod rational;
pub mod rootsys;
pub mod sos;
pub mod vector;

pub use error::Error;
pub use rational::Rational;
pub use vector::WeightVector;

/// Convenience alias used throughout the crate.
pub type Result<T> = core::result::Result<T, Error>;
