//! Vectors in the orthonormal `e`-basis with exact rational coordinates.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::Index;

use num_traits::Zero;

use crate::error::Error;
use crate::rational::{int, ratio, Rational};
use crate::Result;

/// A vector in the ambient `e`-basis of a root system (`r` or `r+1`
/// coordinates). The length is fixed per system; operations on vectors of
/// different lengths are rejected.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct WeightVector {
    coords: Vec<Rational>,
}

impl WeightVector {
    pub fn new(coords: Vec<Rational>) -> Self {
        Self { coords }
    }

    pub fn zero(dim: usize) -> Self {
        Self {
            coords: vec![Rational::zero(); dim],
        }
    }

    pub fn from_ints(coords: &[i64]) -> Self {
        Self {
            coords: coords.iter().map(|&c| int(c)).collect(),
        }
    }

    /// Convenience constructor from `(numerator, denominator)` pairs.
    pub fn from_ratios(coords: &[(i64, i64)]) -> Self {
        Self {
            coords: coords.iter().map(|&(n, d)| ratio(n, d)).collect(),
        }
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[Rational] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Zero::is_zero)
    }

    fn check_dim(&self, other: &Self) -> Result<()> {
        if self.dim() != other.dim() {
            return Err(Error::DimensionMismatch {
                left: self.dim(),
                right: other.dim(),
            });
        }
        Ok(())
    }

    /// Euclidean pairing `<u, v> = sum u_i v_i`, exact.
    pub fn dot(&self, other: &Self) -> Result<Rational> {
        self.check_dim(other)?;
        let mut acc = Rational::zero();
        for (a, b) in self.coords.iter().zip(&other.coords) {
            acc += a * b;
        }
        Ok(acc)
    }

    /// `<v, v>`, always defined.
    pub fn norm_sq(&self) -> Rational {
        self.coords.iter().map(|c| c * c).sum()
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_dim(other)?;
        Ok(Self {
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_dim(other)?;
        Ok(Self {
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a - b)
                .collect(),
        })
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self {
            coords: self.coords.iter().map(|a| a * c).collect(),
        }
    }
}

impl Index<usize> for WeightVector {
    type Output = Rational;
    fn index(&self, i: usize) -> &Rational {
        &self.coords[i]
    }
}

impl fmt::Display for WeightVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for WeightVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn dot_examples() {
        // direct dot product
        let a = WeightVector::from_ints(&[1, 1]);
        let b = WeightVector::from_ints(&[3, 1]);
        assert_eq!(a.dot(&b).unwrap(), int(4));

        // norm-square of the A_1 half-root
        let h = WeightVector::from_ratios(&[(1, 2), (-1, 2)]);
        assert_eq!(h.dot(&h).unwrap(), ratio(1, 2));

        // split C_3: <Theta, 2rho - Theta>
        let theta = WeightVector::from_ints(&[1, 1, 1]);
        let w = WeightVector::from_ints(&[5, 3, 1]);
        assert_eq!(theta.dot(&w).unwrap(), int(9));
    }

    #[test]
    fn dot_rejects_length_mismatch() {
        let a = WeightVector::from_ints(&[1, 2]);
        let b = WeightVector::from_ints(&[1, 2, 3]);
        assert_eq!(
            a.dot(&b),
            Err(Error::DimensionMismatch { left: 2, right: 3 })
        );
    }

    fn small_rational() -> impl Strategy<Value = Rational> {
        (-6i64..=6, 1i64..=4).prop_map(|(n, d)| ratio(n, d))
    }

    fn vec_pair(dim: usize) -> impl Strategy<Value = (WeightVector, WeightVector)> {
        (
            proptest::collection::vec(small_rational(), dim),
            proptest::collection::vec(small_rational(), dim),
        )
            .prop_map(|(a, b)| (WeightVector::new(a), WeightVector::new(b)))
    }

    proptest! {
        #[test]
        fn dot_is_symmetric((a, b) in (1usize..6).prop_flat_map(vec_pair)) {
            prop_assert_eq!(a.dot(&b).unwrap(), b.dot(&a).unwrap());
        }

        #[test]
        fn dot_is_bilinear(
            (a, b) in (1usize..5).prop_flat_map(vec_pair),
            c in proptest::collection::vec(small_rational(), 1..5),
            s in small_rational(),
        ) {
            let c = WeightVector::new(c);
            prop_assume!(c.dim() == a.dim());
            let lhs = a.add(&c.scale(&s)).unwrap().dot(&b).unwrap();
            let rhs = a.dot(&b).unwrap() + s * c.dot(&b).unwrap();
            prop_assert_eq!(lhs, rhs);
        }
    }
}
