//! Exact polynomials in the rank parameter `r` and the multiplicity
//! parameter `k`, with interpolation and grid positivity certification.
//!
//! Fitting solves the full linear system over the rationals and treats every
//! sample beyond the monomial count as a holdout: an inconsistent holdout
//! means the degree bound was violated and the fit is rejected rather than
//! silently returned wrong.

use alloc::collections::BTreeMap;
use alloc::string::String;

use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use crate::error::Error;
use crate::rational::{int, ratio, Rational};
use crate::Result;

/// Polynomial with exact rational coefficients in up to two variables,
/// keyed by `(degree in r, degree in k)`. Canonical form: no zero terms.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct ExactPoly {
    terms: BTreeMap<(u32, u32), Rational>,
}

impl ExactPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: Rational) -> Self {
        Self::from_monomials([(0, 0, c)])
    }

    pub fn var_r() -> Self {
        Self::from_monomials([(1, 0, int(1))])
    }

    pub fn var_k() -> Self {
        Self::from_monomials([(0, 1, int(1))])
    }

    pub fn from_monomials<I: IntoIterator<Item = (u32, u32, Rational)>>(iter: I) -> Self {
        let mut terms = BTreeMap::new();
        for (dr, dk, c) in iter {
            if !c.is_zero() {
                let entry = terms.entry((dr, dk)).or_insert_with(Rational::zero);
                *entry += c;
                if entry.is_zero() {
                    terms.remove(&(dr, dk));
                }
            }
        }
        Self { terms }
    }

    /// Compact table form used for reference formulas:
    /// `(deg_r, deg_k, numerator, denominator)` per term.
    pub fn from_terms(terms: &[(u32, u32, i64, i64)]) -> Self {
        Self::from_monomials(terms.iter().map(|&(dr, dk, n, d)| (dr, dk, ratio(n, d))))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// True when no term involves `k`.
    pub fn is_univariate(&self) -> bool {
        self.terms.keys().all(|&(_, dk)| dk == 0)
    }

    pub fn degree_r(&self) -> u32 {
        self.terms.keys().map(|&(dr, _)| dr).max().unwrap_or(0)
    }

    pub fn degree_k(&self) -> u32 {
        self.terms.keys().map(|&(_, dk)| dk).max().unwrap_or(0)
    }

    pub fn eval(&self, r: &Rational, k: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for (&(dr, dk), c) in &self.terms {
            let mut term = c.clone();
            for _ in 0..dr {
                term *= r;
            }
            for _ in 0..dk {
                term *= k;
            }
            acc += term;
        }
        acc
    }

    pub fn eval_int(&self, r: i64, k: i64) -> Rational {
        self.eval(&int(r), &int(k))
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self
                .terms
                .iter()
                .map(|(&key, v)| (key, v * c))
                .collect(),
        }
    }

    /// Sign of the coefficient of the highest `(total degree, r-degree)`
    /// term. Reports the asymptotic direction that complements the finite
    /// grid check of [`positive_on_grid`].
    pub fn leading_coefficient_sign(&self) -> Ordering {
        let key = self
            .terms
            .keys()
            .max_by_key(|&&(dr, dk)| (dr + dk, dr))
            .copied();
        match key {
            None => Ordering::Equal,
            Some(k) => {
                let c = &self.terms[&k];
                if c.is_positive() {
                    Ordering::Greater
                } else {
                    Ordering::Less
                }
            }
        }
    }
}

impl Add for &ExactPoly {
    type Output = ExactPoly;
    fn add(self, rhs: &ExactPoly) -> ExactPoly {
        ExactPoly::from_monomials(
            self.terms
                .iter()
                .chain(rhs.terms.iter())
                .map(|(&(dr, dk), c)| (dr, dk, c.clone())),
        )
    }
}

impl Sub for &ExactPoly {
    type Output = ExactPoly;
    fn sub(self, rhs: &ExactPoly) -> ExactPoly {
        self + &(-rhs)
    }
}

impl Neg for &ExactPoly {
    type Output = ExactPoly;
    fn neg(self) -> ExactPoly {
        self.scale(&int(-1))
    }
}

impl Mul for &ExactPoly {
    type Output = ExactPoly;
    fn mul(self, rhs: &ExactPoly) -> ExactPoly {
        let mut out = Vec::new();
        for (&(ar, ak), ac) in &self.terms {
            for (&(br, bk), bc) in &rhs.terms {
                out.push((ar + br, ak + bk, ac * bc));
            }
        }
        ExactPoly::from_monomials(out)
    }
}

impl fmt::Display for ExactPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        // highest degree first
        for (idx, (&(dr, dk), c)) in self.terms.iter().rev().enumerate() {
            let negative = c.is_negative();
            if idx == 0 {
                if negative {
                    write!(f, "-")?;
                }
            } else if negative {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mag = c.abs();
            let mut vars = String::new();
            if dr == 1 {
                vars.push('r');
            } else if dr > 1 {
                vars = alloc::format!("r^{dr}");
            }
            if dk >= 1 {
                if !vars.is_empty() {
                    vars.push('*');
                }
                if dk == 1 {
                    vars.push('k');
                } else {
                    vars += &alloc::format!("k^{dk}");
                }
            }
            if vars.is_empty() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{vars}")?;
            } else {
                write!(f, "{mag}*{vars}")?;
            }
        }
        Ok(())
    }
}

/// One interpolation sample: a point in 1 or 2 parameters plus the exact
/// value there.
pub type Sample = (Vec<Rational>, Rational);

/// Interpolate an exact polynomial through `samples`, with per-variable
/// degree bounds (`degree_bounds.len()` is the number of variables, 1 or 2).
///
/// The sample count must exceed the monomial count so at least one sample
/// acts as a holdout. Rank-deficient data is rejected as underdetermined and
/// any inconsistency (a holdout that the unique candidate misses) is
/// reported as a degree-bound violation.
pub fn fit(samples: &[Sample], degree_bounds: &[u32]) -> Result<ExactPoly> {
    let nvars = degree_bounds.len();
    assert!(nvars == 1 || nvars == 2, "1 or 2 variables");

    let monomials: Vec<(u32, u32)> = match *degree_bounds {
        [dr] => (0..=dr).map(|i| (i, 0)).collect(),
        [dr, dk] => {
            let mut m = Vec::new();
            for i in 0..=dr {
                for j in 0..=dk {
                    m.push((i, j));
                }
            }
            m
        }
        _ => unreachable!(),
    };
    let m = monomials.len();
    if samples.len() < m + 1 {
        return Err(Error::InsufficientSamples {
            monomials: m,
            samples: samples.len(),
        });
    }

    // Augmented matrix [A | b], one row per sample.
    let mut rows: Vec<Vec<Rational>> = Vec::with_capacity(samples.len());
    for (point, value) in samples {
        if point.len() != nvars {
            return Err(Error::DimensionMismatch {
                left: point.len(),
                right: nvars,
            });
        }
        let r = &point[0];
        let k = point.get(1).cloned().unwrap_or_else(Rational::zero);
        let mut row: Vec<Rational> = monomials
            .iter()
            .map(|&(dr, dk)| {
                let mut t = Rational::one();
                for _ in 0..dr {
                    t *= r;
                }
                for _ in 0..dk {
                    t *= &k;
                }
                t
            })
            .collect();
        row.push(value.clone());
        rows.push(row);
    }

    // Exact Gaussian elimination with first-nonzero pivoting.
    let ncols = m + 1;
    let mut pivot_row = 0usize;
    let mut pivot_cols = Vec::new();
    for col in 0..m {
        let Some(p) = (pivot_row..rows.len()).find(|&i| !rows[i][col].is_zero()) else {
            continue;
        };
        rows.swap(pivot_row, p);
        let inv = rows[pivot_row][col].recip();
        for c in col..ncols {
            let v = &rows[pivot_row][c] * &inv;
            rows[pivot_row][c] = v;
        }
        for i in 0..rows.len() {
            if i != pivot_row && !rows[i][col].is_zero() {
                let factor = rows[i][col].clone();
                for c in col..ncols {
                    let v = &rows[i][c] - &factor * &rows[pivot_row][c];
                    rows[i][c] = v;
                }
            }
        }
        pivot_cols.push(col);
        pivot_row += 1;
        if pivot_row == rows.len() {
            break;
        }
    }

    // Any zero row with nonzero rhs: the holdouts contradict the candidate.
    for row in rows.iter().skip(pivot_row) {
        if !row[m].is_zero() {
            return Err(Error::DegreeBoundExceeded);
        }
    }
    if pivot_cols.len() < m {
        return Err(Error::InsufficientSamples {
            monomials: m,
            samples: samples.len(),
        });
    }

    Ok(ExactPoly::from_monomials(
        pivot_cols
            .iter()
            .enumerate()
            .map(|(i, &col)| (monomials[col].0, monomials[col].1, rows[i][m].clone())),
    ))
}

/// Exhaustively evaluate `p` on the inclusive integer grid and certify that
/// every value is strictly positive. `ranges` has one `(lo, hi)` per
/// variable (1 or 2 entries); a reversed range is a domain error.
pub fn positive_on_grid(p: &ExactPoly, ranges: &[(i64, i64)]) -> Result<bool> {
    assert!(
        ranges.len() == 1 || ranges.len() == 2,
        "1 or 2 variable ranges"
    );
    if ranges.len() == 1 && !p.is_univariate() {
        return Err(Error::DimensionMismatch { left: 1, right: 2 });
    }
    for &(lo, hi) in ranges {
        if lo > hi {
            return Err(Error::EmptyRange);
        }
    }
    let (klo, khi) = if ranges.len() == 2 { ranges[1] } else { (0, 0) };
    for r in ranges[0].0..=ranges[0].1 {
        for k in klo..=khi {
            if !p.eval_int(r, k).is_positive() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}
