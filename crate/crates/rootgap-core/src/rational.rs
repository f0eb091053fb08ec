//! Exact scalars: arbitrary-precision rationals.
//!
//! `num_rational::BigRational` already maintains the invariants we need
//! (lowest terms, positive denominator), so it is used directly rather than
//! wrapped.

use num_bigint::BigInt;

pub use num_rational::BigRational as Rational;

/// Exact integer as a rational.
pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Exact fraction `n/d` (normalized by the constructor).
pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}
