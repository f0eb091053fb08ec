//! Classical restricted root systems `A_r`, `B_r`, `C_r`, `D_r`, `(BC)_r`
//! in the orthonormal `e`-basis, with per-class multiplicities.
//!
//! Roots are stored structurally (`e_i - e_j`, `e_i + e_j`, `e_i`, `2e_i`)
//! rather than as coordinate vectors, so systems stay cheap at high rank;
//! coordinate views are materialized on demand. Positive roots are generated
//! directly in ascending lexicographic coordinate order, which is the
//! canonical order used everywhere for deterministic output.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_traits::Zero;

use crate::error::Error;
use crate::rational::{int, Rational};
use crate::vector::WeightVector;
use crate::Result;

/// The five classical restricted types.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Family {
    A,
    B,
    C,
    D,
    BC,
}

impl Family {
    pub fn name(self) -> &'static str {
        match self {
            Family::A => "A",
            Family::B => "B",
            Family::C => "C",
            Family::D => "D",
            Family::BC => "BC",
        }
    }

    /// Smallest supported rank. `D_2` and `D_3` coincide with products of
    /// `A`-types and `A_3` and are rejected; callers wanting those must use
    /// the canonical family.
    pub fn min_rank(self) -> u32 {
        match self {
            Family::A | Family::BC => 1,
            Family::B | Family::C => 2,
            Family::D => 4,
        }
    }

    /// Classes of positive roots present in the family.
    pub fn has_pair_roots(self) -> bool {
        true
    }

    pub fn has_sum_roots(self) -> bool {
        !matches!(self, Family::A)
    }

    pub fn has_single_roots(self) -> bool {
        matches!(self, Family::B | Family::BC)
    }

    pub fn has_double_roots(self) -> bool {
        matches!(self, Family::C | Family::BC)
    }

    pub fn parse(s: &str) -> Option<Family> {
        match s.to_ascii_uppercase().as_str() {
            "A" => Some(Family::A),
            "B" => Some(Family::B),
            "C" => Some(Family::C),
            "D" => Some(Family::D),
            "BC" => Some(Family::BC),
            _ => None,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A restricted type: family plus rank.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct RestrictedType {
    pub family: Family,
    pub rank: u32,
}

impl RestrictedType {
    pub fn new(family: Family, rank: u32) -> Result<Self> {
        if rank < family.min_rank() {
            return Err(Error::UnsupportedRank {
                family: family.name(),
                min: family.min_rank(),
                rank,
            });
        }
        Ok(Self { family, rank })
    }

    /// Dimension of the ambient `e`-basis: `r + 1` for `A`, `r` otherwise.
    pub fn ambient_dim(self) -> usize {
        match self.family {
            Family::A => self.rank as usize + 1,
            _ => self.rank as usize,
        }
    }

    /// Number of positive roots (as a set, multiplicities aside).
    pub fn positive_root_count(self) -> u64 {
        let r = self.rank as u64;
        match self.family {
            Family::A => r * (r + 1) / 2,
            Family::B | Family::C => r * r,
            Family::D => r * (r - 1),
            Family::BC => r * r + r,
        }
    }
}

impl fmt::Display for RestrictedType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}_{}", self.family, self.rank)
    }
}

/// Multiplicities per root class. Only the classes present in the family
/// carry a value: `pair` covers `e_i - e_j` (and `e_i + e_j` where present),
/// `single` covers `e_i`, `double` covers `2e_i`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct MultiplicityPattern {
    pair: u32,
    single: Option<u32>,
    double: Option<u32>,
}

impl MultiplicityPattern {
    pub fn type_a(pair: u32) -> Self {
        Self { pair, single: None, double: None }
    }

    pub fn type_b(pair: u32, single: u32) -> Self {
        Self { pair, single: Some(single), double: None }
    }

    pub fn type_c(pair: u32, double: u32) -> Self {
        Self { pair, single: None, double: Some(double) }
    }

    pub fn type_d(pair: u32) -> Self {
        Self { pair, single: None, double: None }
    }

    pub fn type_bc(pair: u32, single: u32, double: u32) -> Self {
        Self { pair, single: Some(single), double: Some(double) }
    }

    pub fn pair(&self) -> u32 {
        self.pair
    }

    pub fn single(&self) -> Option<u32> {
        self.single
    }

    pub fn double(&self) -> Option<u32> {
        self.double
    }

    /// The pattern shape must list exactly the classes the family has, with
    /// strictly positive multiplicities.
    pub fn matches(&self, family: Family) -> bool {
        let shape_ok = self.single.is_some() == family.has_single_roots()
            && self.double.is_some() == family.has_double_roots();
        let positive = self.pair > 0
            && self.single.is_none_or(|m| m > 0)
            && self.double.is_none_or(|m| m > 0);
        shape_ok && positive
    }

    pub fn of(&self, root: Root) -> u32 {
        match root {
            Root::Diff(..) | Root::Sum(..) => self.pair,
            Root::Single(_) => self.single.expect("family has single roots"),
            Root::Double(_) => self.double.expect("family has double roots"),
        }
    }
}

/// A root of a classical system, stored structurally. Indices are 1-based.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Root {
    /// `e_i - e_j`, `i < j`
    Diff(u32, u32),
    /// `e_i + e_j`, `i < j`
    Sum(u32, u32),
    /// `e_i`
    Single(u32),
    /// `2 e_i`
    Double(u32),
}

impl Root {
    pub fn to_vector(self, ambient: usize) -> WeightVector {
        let mut coords = vec![0i64; ambient];
        match self {
            Root::Diff(i, j) => {
                coords[i as usize - 1] = 1;
                coords[j as usize - 1] = -1;
            }
            Root::Sum(i, j) => {
                coords[i as usize - 1] = 1;
                coords[j as usize - 1] = 1;
            }
            Root::Single(i) => coords[i as usize - 1] = 1,
            Root::Double(i) => coords[i as usize - 1] = 2,
        }
        WeightVector::from_ints(&coords)
    }

    /// `<root, w>` against a coordinate slice, in O(1) rational operations.
    pub fn value(self, w: &[Rational]) -> Rational {
        match self {
            Root::Diff(i, j) => &w[i as usize - 1] - &w[j as usize - 1],
            Root::Sum(i, j) => &w[i as usize - 1] + &w[j as usize - 1],
            Root::Single(i) => w[i as usize - 1].clone(),
            Root::Double(i) => int(2) * &w[i as usize - 1],
        }
    }
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Root::Diff(i, j) => write!(f, "e{i}-e{j}"),
            Root::Sum(i, j) => write!(f, "e{i}+e{j}"),
            Root::Single(i) => write!(f, "e{i}"),
            Root::Double(i) => write!(f, "2e{i}"),
        }
    }
}

/// A full restricted root system: type, simple roots, and the positive
/// roots with their multiplicities in canonical (ascending lexicographic
/// coordinate) order.
#[derive(Clone, Debug)]
pub struct RootSystem {
    rtype: RestrictedType,
    pattern: MultiplicityPattern,
    simple: Vec<Root>,
    positive: Vec<(Root, u32)>,
}

impl RootSystem {
    pub fn new(rtype: RestrictedType, pattern: MultiplicityPattern) -> Result<Self> {
        // re-validate the rank in case the type was constructed literally
        let rtype = RestrictedType::new(rtype.family, rtype.rank)?;
        if !pattern.matches(rtype.family) {
            return Err(Error::PatternMismatch {
                family: rtype.family.name(),
            });
        }
        let r = rtype.rank;
        let fam = rtype.family;

        let mut simple: Vec<Root> = (1..r).map(|i| Root::Diff(i, i + 1)).collect();
        match fam {
            Family::A => simple.push(Root::Diff(r, r + 1)),
            Family::B | Family::BC => simple.push(Root::Single(r)),
            Family::C => simple.push(Root::Double(r)),
            Family::D => simple.push(Root::Sum(r - 1, r)),
        }

        // Ascending lexicographic coordinate order comes out of descending
        // leading index: within a fixed leading index i the order is
        // e_i - e_j (j ascending), e_i, e_i + e_j (j descending), 2e_i.
        let mut positive = Vec::with_capacity(rtype.positive_root_count() as usize);
        let top = if fam == Family::A { r + 1 } else { r };
        for i in (1..=r).rev() {
            for j in i + 1..=top {
                positive.push((Root::Diff(i, j), pattern.pair));
            }
            if fam.has_single_roots() {
                positive.push((Root::Single(i), pattern.single.unwrap()));
            }
            if fam.has_sum_roots() {
                for j in (i + 1..=r).rev() {
                    positive.push((Root::Sum(i, j), pattern.pair));
                }
            }
            if fam.has_double_roots() {
                positive.push((Root::Double(i), pattern.double.unwrap()));
            }
        }
        debug_assert_eq!(positive.len() as u64, rtype.positive_root_count());

        Ok(Self { rtype, pattern, simple, positive })
    }

    pub fn rtype(&self) -> RestrictedType {
        self.rtype
    }

    pub fn family(&self) -> Family {
        self.rtype.family
    }

    pub fn rank(&self) -> u32 {
        self.rtype.rank
    }

    pub fn pattern(&self) -> MultiplicityPattern {
        self.pattern
    }

    pub fn ambient_dim(&self) -> usize {
        self.rtype.ambient_dim()
    }

    pub fn simple_roots(&self) -> &[Root] {
        &self.simple
    }

    pub fn simple_root_vectors(&self) -> Vec<WeightVector> {
        let d = self.ambient_dim();
        self.simple.iter().map(|a| a.to_vector(d)).collect()
    }

    pub fn positive_roots(&self) -> &[(Root, u32)] {
        &self.positive
    }

    pub fn positive_root_vectors(&self) -> Vec<(WeightVector, u32)> {
        let d = self.ambient_dim();
        self.positive
            .iter()
            .map(|&(a, m)| (a.to_vector(d), m))
            .collect()
    }

    /// Sum of all positive roots counted with multiplicity.
    pub fn two_rho(&self) -> WeightVector {
        let mut acc = vec![0i64; self.ambient_dim()];
        for &(root, mult) in &self.positive {
            let m = mult as i64;
            match root {
                Root::Diff(i, j) => {
                    acc[i as usize - 1] += m;
                    acc[j as usize - 1] -= m;
                }
                Root::Sum(i, j) => {
                    acc[i as usize - 1] += m;
                    acc[j as usize - 1] += m;
                }
                Root::Single(i) => acc[i as usize - 1] += m,
                Root::Double(i) => acc[i as usize - 1] += 2 * m,
            }
        }
        WeightVector::from_ints(&acc)
    }

    /// The unique positive root from which every positive root differs by a
    /// nonnegative combination of simple roots.
    pub fn highest_root(&self) -> Root {
        let r = self.rank();
        match self.family() {
            Family::A => Root::Diff(1, r + 1),
            Family::B | Family::D => {
                if r >= 2 {
                    Root::Sum(1, 2)
                } else {
                    Root::Single(1)
                }
            }
            Family::C | Family::BC => Root::Double(1),
        }
    }

    /// Dimension `n` of the associated symmetric space:
    /// rank plus the sum of all multiplicities.
    pub fn symmetric_space_dim(&self) -> u64 {
        self.rank() as u64
            + self
                .positive
                .iter()
                .map(|&(_, m)| m as u64)
                .sum::<u64>()
    }

    /// Positive roots `a` such that `2a` is not a root: everything except
    /// the `e_i` class of `(BC)_r`. Reduced systems return all of their
    /// positive roots.
    pub fn non_multipliable_roots(&self) -> Vec<Root> {
        self.positive
            .iter()
            .map(|&(a, _)| a)
            .filter(|a| !(self.family() == Family::BC && matches!(a, Root::Single(_))))
            .collect()
    }

    /// Is `v` a root of the system (positive or negative)?
    pub fn is_root(&self, v: &WeightVector) -> bool {
        if v.dim() != self.ambient_dim() {
            return false;
        }
        let neg = v.scale(&int(-1));
        let d = self.ambient_dim();
        self.positive
            .iter()
            .any(|&(a, _)| a.to_vector(d) == *v || a.to_vector(d) == neg)
    }

    /// Coordinates of `v` in the simple-root basis, if `v` lies in their
    /// span. Solved exactly by Gaussian elimination.
    pub fn simple_root_coords(&self, v: &WeightVector) -> Option<Vec<Rational>> {
        let d = self.ambient_dim();
        let r = self.rank() as usize;
        // rows: ambient coordinates; columns: simple roots, then v
        let mut m: Vec<Vec<Rational>> = (0..d)
            .map(|row| {
                let mut line: Vec<Rational> = self
                    .simple
                    .iter()
                    .map(|a| a.to_vector(d)[row].clone())
                    .collect();
                line.push(v[row].clone());
                line
            })
            .collect();

        let mut pivot_row = 0usize;
        let mut pivots: Vec<(usize, usize)> = Vec::new(); // (row, col)
        for col in 0..r {
            let Some(p) = (pivot_row..d).find(|&i| !m[i][col].is_zero()) else {
                continue;
            };
            m.swap(pivot_row, p);
            let inv = m[pivot_row][col].recip();
            for c in col..=r {
                let val = &m[pivot_row][c] * &inv;
                m[pivot_row][c] = val;
            }
            for i in 0..d {
                if i != pivot_row && !m[i][col].is_zero() {
                    let f = m[i][col].clone();
                    for c in col..=r {
                        let val = &m[i][c] - &f * &m[pivot_row][c];
                        m[i][c] = val;
                    }
                }
            }
            pivots.push((pivot_row, col));
            pivot_row += 1;
            if pivot_row == d {
                break;
            }
        }
        // simple roots are linearly independent, so all r columns pivot
        if pivots.len() < r {
            return None;
        }
        // consistency: leftover rows must be 0 = 0
        if m.iter().skip(pivot_row).any(|row| !row[r].is_zero()) {
            return None;
        }
        let mut coords = vec![Rational::zero(); r];
        for &(row, col) in &pivots {
            coords[col] = m[row][r].clone();
        }
        Some(coords)
    }
}

impl fmt::Display for RootSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.rtype)
    }
}

/// Text form of the positive-root classes of a family, as listed in the
/// standard tables.
pub fn delta_plus_description(family: Family) -> &'static str {
    match family {
        Family::A => "{e_i - e_j : i < j}",
        Family::B => "{e_i ± e_j : i < j} ∪ {e_i}",
        Family::C => "{e_i ± e_j : i < j} ∪ {2e_i}",
        Family::D => "{e_i ± e_j : i < j}",
        Family::BC => "{e_i ± e_j : i < j} ∪ {e_i, 2e_i}",
    }
}
