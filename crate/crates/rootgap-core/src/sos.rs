//! The vector `Theta`: half sum of a maximal strongly orthogonal system of
//! non-multipliable roots.
//!
//! It is produced two independent ways and cross-checked:
//!
//! * `theta_closed` instantiates the tabulated simple-root coefficient
//!   schedule for the family at the given rank and converts to the
//!   `e`-basis;
//! * `theta_oracle` enumerates by backtracking all maximum-cardinality
//!   strongly orthogonal subsets of the non-multipliable positive roots and
//!   selects the unique dominant half-sum.
//!
//! "Maximal" is read as maximum cardinality, and among the maximum systems
//! the one whose half-sum lies in the closed dominant chamber is selected;
//! this is the only selection rule consistent with the tabulated values
//! (for `B_3` the cascade order would give `e_1 + e_3/2` instead of the
//! tabulated `e_1 + e_2/2`). Non-uniqueness of the dominant half-sum is
//! surfaced as an error, never silently resolved.

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;

use num_traits::Signed;

use crate::error::Error;
use crate::rational::{int, ratio, Rational};
use crate::rootsys::{Family, RootSystem};
use crate::vector::WeightVector;
use crate::Result;

/// Default rank cap for the exhaustive enumeration.
pub const DEFAULT_SOS_RANK_CAP: u32 = 6;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Parity {
    Odd,
    Even,
    Any,
}

/// The tabulated simple-root coefficient schedule of `Theta` for one family
/// and rank parity.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct ThetaSpec {
    pub family: Family,
    pub parity: Parity,
}

impl ThetaSpec {
    /// The schedule applicable to `family` at rank `rank`.
    pub fn select(family: Family, rank: u32) -> ThetaSpec {
        let parity = match family {
            Family::C | Family::BC => Parity::Any,
            _ if rank % 2 == 1 => Parity::Odd,
            _ => Parity::Even,
        };
        ThetaSpec { family, parity }
    }

    /// Coefficients on the simple roots `a_1 .. a_r`.
    pub fn coefficients(&self, rank: u32) -> Vec<Rational> {
        let r = rank as i64;
        let idx = |i: i64| i as usize - 1;
        let mut c = vec![Rational::default(); rank as usize];
        match (self.family, self.parity) {
            (Family::A, Parity::Odd) => {
                // sum i/2 a_i for i <= (r-1)/2, then (r-i+1)/2 a_i
                for i in 1..=(r - 1) / 2 {
                    c[idx(i)] = ratio(i, 2);
                }
                for i in (r + 1) / 2..=r {
                    c[idx(i)] = ratio(r - i + 1, 2);
                }
            }
            (Family::A, Parity::Even) => {
                for i in 1..=r / 2 {
                    c[idx(i)] = ratio(i, 2);
                }
                c[idx(r / 2 + 1)] = ratio(r, 4);
                for i in r / 2 + 2..=r {
                    c[idx(i)] = ratio(r - i + 1, 2);
                }
            }
            (Family::B, Parity::Odd) => {
                for i in 1..=(r - 1) / 2 {
                    c[idx(i)] = int(i);
                }
                for i in (r + 1) / 2..=r {
                    c[idx(i)] = ratio(r, 2);
                }
            }
            (Family::B, Parity::Even) => {
                for i in 1..=r / 2 {
                    c[idx(i)] = int(i);
                }
                for i in r / 2 + 1..=r {
                    c[idx(i)] = ratio(r, 2);
                }
            }
            (Family::C, _) => {
                for i in 1..r {
                    c[idx(i)] = int(i);
                }
                c[idx(r)] = ratio(r, 2);
            }
            (Family::D, Parity::Odd) => {
                for i in 1..=(r - 1) / 2 {
                    c[idx(i)] = int(i);
                }
                for i in (r + 1) / 2..=r - 2 {
                    c[idx(i)] = ratio(r - 1, 2);
                }
                c[idx(r - 1)] = ratio(r - 1, 4);
                c[idx(r)] = ratio(r - 1, 4);
            }
            (Family::D, Parity::Even) => {
                for i in 1..=r / 2 {
                    c[idx(i)] = int(i);
                }
                for i in r / 2 + 1..=r - 2 {
                    c[idx(i)] = ratio(r, 2);
                }
                c[idx(r - 1)] = ratio(r, 4);
                c[idx(r)] = ratio(r, 4);
            }
            (Family::BC, _) => {
                // simple roots chosen as a_1, .., a_{r-1}, (a_r, 2a_r) with
                // a_r = e_r
                for i in 1..r {
                    c[idx(i)] = int(i);
                }
                c[idx(r)] = int(r);
            }
            (f, p) => unreachable!("no schedule for {f:?} with parity {p:?}"),
        }
        c
    }
}

/// `sum c_i a_i` over the simple roots of `s`, as an `e`-basis vector.
pub fn to_e_basis(coeffs: &[Rational], s: &RootSystem) -> Result<WeightVector> {
    if coeffs.len() != s.rank() as usize {
        return Err(Error::DimensionMismatch {
            left: coeffs.len(),
            right: s.rank() as usize,
        });
    }
    let mut acc = WeightVector::zero(s.ambient_dim());
    for (c, a) in coeffs.iter().zip(s.simple_roots()) {
        acc = acc.add(&a.to_vector(s.ambient_dim()).scale(c))?;
    }
    Ok(acc)
}

/// Tabulated `Theta` of the system, via the parity-correct schedule.
pub fn theta_closed(s: &RootSystem) -> WeightVector {
    let spec = ThetaSpec::select(s.family(), s.rank());
    let coeffs = spec.coefficients(s.rank());
    to_e_basis(&coeffs, s).expect("schedule length equals rank")
}

/// Are `a` and `b` strongly orthogonal in `s`: neither `a+b` nor `a-b` is a
/// root? Both must be roots of `s` (the sign-extended root set is used for
/// membership, so for `(BC)_r` the multipliable roots still count as
/// ambient roots).
pub fn is_strongly_orthogonal(
    a: &WeightVector,
    b: &WeightVector,
    s: &RootSystem,
) -> Result<bool> {
    if !s.is_root(a) || !s.is_root(b) {
        return Err(Error::NotARoot);
    }
    let sum = a.add(b)?;
    let diff = a.sub(b)?;
    Ok(!s.is_root(&sum) && !s.is_root(&diff))
}

/// Half of the sum of `roots`.
pub fn half_sum(roots: &[WeightVector], ambient: usize) -> WeightVector {
    let mut acc = WeightVector::zero(ambient);
    for v in roots {
        acc = acc.add(v).expect("uniform ambient dimension");
    }
    acc.scale(&ratio(1, 2))
}

/// Does `v` lie in the closed dominant chamber of `s` (pairing >= 0 with
/// every simple root)?
pub fn is_dominant(v: &WeightVector, s: &RootSystem) -> bool {
    let d = s.ambient_dim();
    s.simple_roots()
        .iter()
        .all(|a| !a.to_vector(d).dot(v).expect("ambient dims match").is_negative())
}

/// All maximum-cardinality strongly orthogonal subsets of the
/// non-multipliable positive roots, in canonical order, by backtracking
/// over the compatibility graph with candidate-set pruning.
pub fn max_strongly_orthogonal_systems(
    s: &RootSystem,
    rank_cap: u32,
) -> Result<Vec<Vec<WeightVector>>> {
    if s.rank() > rank_cap {
        return Err(Error::SearchCapExceeded {
            rank: s.rank(),
            cap: rank_cap,
        });
    }
    let d = s.ambient_dim();
    let candidates: Vec<WeightVector> = s
        .non_multipliable_roots()
        .iter()
        .map(|a| a.to_vector(d))
        .collect();
    let n = candidates.len();
    assert!(n <= 128, "bitset capacity");

    // Root-set membership for sums and differences of candidate pairs.
    let mut all_roots: BTreeSet<WeightVector> = BTreeSet::new();
    for &(a, _) in s.positive_roots() {
        let v = a.to_vector(d);
        all_roots.insert(v.scale(&int(-1)));
        all_roots.insert(v);
    }

    // compat[i] has bit j set iff candidates i and j are strongly orthogonal
    let mut compat = vec![0u128; n];
    for i in 0..n {
        for j in i + 1..n {
            let sum = candidates[i].add(&candidates[j]).unwrap();
            let diff = candidates[i].sub(&candidates[j]).unwrap();
            if !all_roots.contains(&sum) && !all_roots.contains(&diff) {
                compat[i] |= 1 << j;
                compat[j] |= 1 << i;
            }
        }
    }

    let mut best: Vec<u128> = vec![0]; // maximum cliques found so far
    let mut best_size = 0u32;

    fn search(
        start: usize,
        chosen: u128,
        chosen_size: u32,
        allowed: u128,
        compat: &[u128],
        n: usize,
        best: &mut Vec<u128>,
        best_size: &mut u32,
    ) {
        if chosen_size > *best_size {
            *best_size = chosen_size;
            best.clear();
        }
        if chosen_size == *best_size && chosen != 0 {
            best.push(chosen);
        }
        // capacity bound: even taking every remaining compatible candidate
        // cannot beat the best
        if chosen_size + allowed.count_ones() < *best_size {
            return;
        }
        for i in start..n {
            if allowed & (1 << i) == 0 {
                continue;
            }
            if chosen_size + ((n - i) as u32).min(allowed.count_ones()) < *best_size {
                break;
            }
            search(
                i + 1,
                chosen | (1 << i),
                chosen_size + 1,
                allowed & compat[i],
                compat,
                n,
                best,
                best_size,
            );
        }
    }

    let full: u128 = if n == 128 { !0 } else { (1u128 << n) - 1 };
    search(0, 0, 0, full, &compat, n, &mut best, &mut best_size);

    // decode bitsets; canonical order is by ascending member indices, which
    // the search produces, but normalize by sorting to be safe
    let mut sets: Vec<Vec<usize>> = best
        .iter()
        .map(|&bits| (0..n).filter(|&i| bits & (1 << i) != 0).collect())
        .collect();
    sets.sort();
    sets.dedup();
    Ok(sets
        .into_iter()
        .map(|idxs| idxs.into_iter().map(|i| candidates[i].clone()).collect())
        .collect())
}

/// Brute-force `Theta`: enumerate all maximum strongly orthogonal systems
/// and return the unique half-sum lying in the closed dominant chamber.
/// Zero or several distinct dominant half-sums is an oracle-ambiguity
/// error.
pub fn theta_oracle(s: &RootSystem, rank_cap: u32) -> Result<WeightVector> {
    let systems = max_strongly_orthogonal_systems(s, rank_cap)?;
    let total = systems.len();
    let mut dominant: BTreeSet<WeightVector> = BTreeSet::new();
    for sys in &systems {
        let h = half_sum(sys, s.ambient_dim());
        if is_dominant(&h, s) {
            dominant.insert(h);
        }
    }
    if dominant.len() == 1 {
        Ok(dominant.into_iter().next().unwrap())
    } else {
        Err(Error::OracleAmbiguity {
            dominant: dominant.len(),
            total,
        })
    }
}
