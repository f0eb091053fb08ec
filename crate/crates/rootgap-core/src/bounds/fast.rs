//! Closed-coefficient route in overflow-checked scaled integers.
//!
//! `2rho` and `Theta` have half-integer coordinates given by short
//! per-coordinate formulas in `(r, k, i)`, so doubling every coordinate
//! makes the whole computation integral: `T4 = 4 <Theta, w>`,
//! `L2 = 2 ell`, `W4 = 4 <w, w>`. No root system is materialized and no
//! big-integer allocation happens per instance, which is what makes the
//! full `r <= 1000, k <= 100` sweep take seconds. All arithmetic is
//! `i128` with overflow checks, so results are exact or an error — never
//! silently wrapped.
//!
//! The test suite pins this route against the generic big-rational route
//! field by field on a shared rank range.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::Signed;

use crate::catalog::{resolve, GroupFamily};
use crate::error::Error;
use crate::rational::{int, Rational};
use crate::rootsys::{Family, MultiplicityPattern, RestrictedType};
use crate::vector::WeightVector;
use crate::Result;

use super::BoundReport;

#[inline]
fn add(a: i128, b: i128) -> Result<i128> {
    a.checked_add(b).ok_or(Error::Overflow)
}

#[inline]
fn mul(a: i128, b: i128) -> Result<i128> {
    a.checked_mul(b).ok_or(Error::Overflow)
}

fn big_ratio(n: i128, d: i128) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// The doubled coordinate vectors of one instance.
struct Scaled {
    rtype: RestrictedType,
    pattern: MultiplicityPattern,
    /// `2 * (2rho)_i`
    two_rho2: Vec<i128>,
    /// `2 * Theta_i`
    theta2: Vec<i128>,
    /// `2 * w_i`
    w2: Vec<i128>,
}

fn scaled(family: GroupFamily, r: u32, k: Option<u32>) -> Result<Scaled> {
    let (rtype, pattern) = family.restricted(r, k)?;
    let r = rtype.rank as i128;
    let ambient = rtype.ambient_dim();
    let m_pair = pattern.pair() as i128;
    let m_single = pattern.single().unwrap_or(0) as i128;
    let m_double = pattern.double().unwrap_or(0) as i128;

    // per-coordinate 2 * (2rho)_i, derived by counting which positive roots
    // hit coordinate i with which sign
    let mut two_rho2 = Vec::with_capacity(ambient);
    for i in 1..=ambient as i128 {
        let v = match rtype.family {
            Family::A => mul(m_pair, r - 2 * i + 2)?,
            _ => add(mul(2 * m_pair, r - i)?, m_single + 2 * m_double)?,
        };
        two_rho2.push(mul(2, v)?);
    }

    // 2 * Theta_i from the tabulated e-basis forms
    let mut theta2 = vec![0i128; ambient];
    match rtype.family {
        Family::A => {
            // odd r = 2m+1: +1/2 up to m+1, -1/2 from m+2
            // even r = 2m: +1/2 up to m, 0 at m+1, -1/2 from m+2
            let m = (rtype.rank as usize).div_euclid(2);
            let positive_top = if rtype.rank % 2 == 1 { m + 1 } else { m };
            for (i, t) in theta2.iter_mut().enumerate() {
                let pos = i + 1;
                if pos <= positive_top {
                    *t = 1;
                } else if pos >= m + 2 {
                    *t = -1;
                }
            }
        }
        Family::B => {
            let m = (rtype.rank as usize).div_euclid(2);
            for (i, t) in theta2.iter_mut().enumerate() {
                let pos = i + 1;
                if pos <= m {
                    *t = 2;
                } else if pos == m + 1 && rtype.rank % 2 == 1 {
                    *t = 1;
                }
            }
        }
        Family::D => {
            let m = (rtype.rank as usize).div_euclid(2);
            for t in theta2.iter_mut().take(m) {
                *t = 2;
            }
        }
        Family::C | Family::BC => {
            for t in theta2.iter_mut() {
                *t = 2;
            }
        }
    }

    let w2: Vec<i128> = two_rho2
        .iter()
        .zip(&theta2)
        .map(|(&a, &b)| a - b)
        .collect();

    Ok(Scaled { rtype, pattern, two_rho2, theta2, w2 })
}

impl Scaled {
    /// Pairing of `w` with every simple root is nonnegative?
    fn w_dominant(&self) -> bool {
        let w = &self.w2;
        let r = self.rtype.rank as usize;
        let consecutive_ok = (0..w.len() - 1).all(|i| w[i] >= w[i + 1]);
        let last_ok = match self.rtype.family {
            Family::A => true, // covered by the consecutive differences
            Family::B | Family::C | Family::BC => w[r - 1] >= 0,
            Family::D => w[r - 2] + w[r - 1] >= 0,
        };
        consecutive_ok && last_ok
    }

    /// `4 <Theta, w>`
    fn t4(&self) -> Result<i128> {
        let mut acc = 0i128;
        for (&t, &w) in self.theta2.iter().zip(&self.w2) {
            acc = add(acc, mul(t, w)?)?;
        }
        Ok(acc)
    }

    /// `2 ell` via the highest root (requires dominance).
    fn l2(&self) -> Result<i128> {
        let w = &self.w2;
        let r = self.rtype.rank as usize;
        Ok(match self.rtype.family {
            Family::A => w[0] - w[r],
            Family::B | Family::D => add(w[0], w[1])?,
            Family::C | Family::BC => mul(2, w[0])?,
        })
    }

    /// `4 <w, w>`
    fn w4(&self) -> Result<i128> {
        let mut acc = 0i128;
        for &w in &self.w2 {
            acc = add(acc, mul(w, w)?)?;
        }
        Ok(acc)
    }

    fn n(&self) -> u64 {
        let r = self.rtype.rank as u64;
        let pair_count = match self.rtype.family {
            Family::A => r * (r + 1) / 2,
            _ => r * (r - 1),
        };
        r + pair_count * self.pattern.pair() as u64
            + r * self.pattern.single().unwrap_or(0) as u64
            + r * self.pattern.double().unwrap_or(0) as u64
    }

    /// Doubled pairings `2 <alpha, w>` of every positive root, with
    /// multiplicities, emitted in canonical order.
    fn doubled_values(&self) -> Vec<(i128, u32)> {
        let w = &self.w2;
        let r = self.rtype.rank as usize;
        let top = if self.rtype.family == Family::A { r + 1 } else { r };
        let fam = self.rtype.family;
        let mut out = Vec::with_capacity(self.rtype.positive_root_count() as usize);
        for i in (1..=r).rev() {
            for j in i + 1..=top {
                out.push((w[i - 1] - w[j - 1], self.pattern.pair()));
            }
            if fam.has_single_roots() {
                out.push((w[i - 1], self.pattern.single().unwrap()));
            }
            if fam.has_sum_roots() {
                for j in (i + 1..=r).rev() {
                    out.push((w[i - 1] + w[j - 1], self.pattern.pair()));
                }
            }
            if fam.has_double_roots() {
                out.push((2 * w[i - 1], self.pattern.double().unwrap()));
            }
        }
        out
    }
}

/// Minimal `rank + t` with the sum of the `t` smallest doubled values
/// strictly above `w4 / 2` (that is, the plain values above `<w, w>`).
fn critical_index_from_doubled(mut values: Vec<(i128, u32)>, w4: i128, rank: u32) -> Result<u64> {
    values.sort_by_key(|&(v, _)| v);
    let mut sum2 = 0i128; // running sum of doubled values
    let mut taken = 0u64;
    for (v, mult) in values {
        let whole = mul(v, mult as i128)?;
        if mul(2, add(sum2, whole)?)? > w4 {
            for _ in 0..mult {
                sum2 = add(sum2, v)?;
                taken += 1;
                if mul(2, sum2)? > w4 {
                    return Ok(rank as u64 + taken);
                }
            }
            unreachable!("crossing must occur inside the group");
        }
        sum2 = add(sum2, whole)?;
        taken += mult as u64;
    }
    Err(Error::Infeasible)
}

/// The margin check and derived quantities of one instance, without
/// materializing anything of size `|Delta+|` unless the direct index or the
/// root-sum identity is requested.
#[derive(Clone, Debug)]
pub struct FastCheck {
    pub family: GroupFamily,
    pub rank: u32,
    pub k: Option<u32>,
    pub n: u64,
    pub theta_pairing: Rational,
    pub ell: Rational,
    pub margin: Rational,
    pub passes: bool,
    pub k_closed: Rational,
    pub k_direct: Option<u64>,
    pub w_dominant: bool,
    /// `<2rho - w, w> = <Theta, w>` and the root-sum identity
    /// `sum_mult <alpha, w> = <2rho, w>`, when requested
    pub identities_ok: Option<bool>,
}

pub fn fast_check(
    family: GroupFamily,
    r: u32,
    k: Option<u32>,
    with_direct: bool,
    with_identities: bool,
) -> Result<FastCheck> {
    let sc = scaled(family, r, k)?;
    let dominant = sc.w_dominant();
    if !dominant {
        // never happens on the catalog; the closed-form ell would be wrong
        return Err(Error::Degenerate);
    }
    let t4 = sc.t4()?;
    assert!(t4 > 0, "Theta pairing must be positive");
    let l2 = sc.l2()?;
    if l2 <= 0 {
        return Err(Error::Degenerate);
    }
    let n = sc.n();

    let constant = family.type_constant();
    // margin > 0  iff  T4 * c_den > c_num * r * 2 * L2
    let c_num = i128::try_from(constant.numer()).expect("small constant");
    let c_den = i128::try_from(constant.denom()).expect("small constant");
    let passes = mul(t4, c_den)? > mul(mul(c_num, r as i128)?, mul(2, l2)?)?;

    let theta_pairing = big_ratio(t4, 4);
    let ell = big_ratio(l2, 2);
    let margin = &theta_pairing / &ell - constant * int(r as i64);
    debug_assert_eq!(margin.is_positive(), passes);
    let k_closed = int(n as i64 + 1) - &theta_pairing / &ell;

    let k_direct = if with_direct {
        let idx = critical_index_from_doubled(sc.doubled_values(), sc.w4()?, sc.rtype.rank)?;
        assert!(
            int(idx as i64) <= k_closed,
            "direct index exceeds the closed-form bound"
        );
        Some(idx)
    } else {
        None
    };

    let identities_ok = if with_identities {
        // <2rho - w, w> == <Theta, w>, recomputed from the vectors
        let mut lhs = 0i128;
        for (&rho2, &w2) in sc.two_rho2.iter().zip(&sc.w2) {
            lhs = add(lhs, mul(rho2 - w2, w2)?)?;
        }
        let id_a = lhs == t4;

        // 2 * sum_mult 2<alpha, w> == sum_i (2*2rho_i)(2w_i) = 4 <2rho, w>
        let mut value_sum = 0i128;
        for (v, mult) in sc.doubled_values() {
            value_sum = add(value_sum, mul(v, mult as i128)?)?;
        }
        let mut rho_w = 0i128;
        for (&rho2, &w2) in sc.two_rho2.iter().zip(&sc.w2) {
            rho_w = add(rho_w, mul(rho2, w2)?)?;
        }
        let id_b = mul(2, value_sum)? == rho_w;

        Some(id_a && id_b)
    } else {
        None
    };

    Ok(FastCheck {
        family,
        rank: r,
        k,
        n,
        theta_pairing,
        ell,
        margin,
        passes,
        k_closed,
        k_direct,
        w_dominant: dominant,
        identities_ok,
    })
}

/// Full [`BoundReport`] by the fast route, including the coordinate
/// vectors. Intended for route cross-checks and moderate ranks; sweeps use
/// [`fast_check`].
pub fn fast_report(family: GroupFamily, r: u32, k: Option<u32>) -> Result<BoundReport> {
    let (desc, _) = resolve(family, r, k)?;
    let sc = scaled(family, r, k)?;
    let check = fast_check(family, r, k, true, false)?;
    let halves = |v: &[i128]| {
        WeightVector::new(v.iter().map(|&x| big_ratio(x, 2)).collect())
    };
    Ok(BoundReport {
        n: check.n,
        two_rho: halves(&sc.two_rho2),
        theta: halves(&sc.theta2),
        w: halves(&sc.w2),
        theta_pairing: check.theta_pairing,
        ell: check.ell,
        k_direct: check.k_direct,
        k_closed: check.k_closed,
        constant: desc.constant.clone(),
        margin: check.margin,
        hd_strict_upper: int(check.n as i64) - &desc.constant * int(r as i64),
        sharpness_reference: check.n - r as u64,
        passes: check.passes,
        group: desc,
    })
}

/// Exact ratio `<Theta, w>/ell` of a parametric family at large `k`, for
/// comparison against the stable-limit constants (`r/4` for the orthogonal
/// family, `r/2` for the unitary and symplectic ones).
pub fn stable_limit_ratio(family: GroupFamily, r: u32, k: u32) -> Result<Rational> {
    if !family.parametric() {
        return Err(Error::InvalidParameter {
            family: family.token(),
            reason: "stable limit needs the parameter k",
        });
    }
    let sc = scaled(family, r, Some(k))?;
    let t4 = sc.t4()?;
    let l2 = sc.l2()?;
    if l2 <= 0 {
        return Err(Error::Degenerate);
    }
    // (T4/4) / (L2/2) = T4 / (2 L2)
    Ok(big_ratio(t4, mul(2, l2)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bounds::compute_report;
    use crate::rational::ratio;

    fn all_instances(max_rank: u32, ks: &[u32]) -> Vec<(GroupFamily, u32, Option<u32>)> {
        let mut out = Vec::new();
        for family in GroupFamily::ALL {
            for r in family.min_rank()..=max_rank {
                if family.parametric() {
                    for &k in ks {
                        if !(family == GroupFamily::SoRK && k == 0) {
                            out.push((family, r, Some(k)));
                        }
                    }
                } else {
                    out.push((family, r, None));
                }
            }
        }
        out
    }

    #[test]
    fn fast_route_matches_generic_route() {
        for (family, r, k) in all_instances(24, &[0, 1, 2, 5, 20]) {
            let fast = fast_report(family, r, k).unwrap();
            let (desc, _) = resolve(family, r, k).unwrap();
            let slow = compute_report(&desc).unwrap();
            assert_eq!(fast.n, slow.n, "{family} r={r} k={k:?}");
            assert_eq!(fast.two_rho, slow.two_rho, "{family} r={r} k={k:?}");
            assert_eq!(fast.theta, slow.theta, "{family} r={r} k={k:?}");
            assert_eq!(fast.w, slow.w, "{family} r={r} k={k:?}");
            assert_eq!(fast.theta_pairing, slow.theta_pairing, "{family} r={r}");
            assert_eq!(fast.ell, slow.ell, "{family} r={r} k={k:?}");
            assert_eq!(fast.k_direct, slow.k_direct, "{family} r={r} k={k:?}");
            assert_eq!(fast.k_closed, slow.k_closed, "{family} r={r} k={k:?}");
            assert_eq!(fast.margin, slow.margin, "{family} r={r} k={k:?}");
            assert_eq!(fast.passes, slow.passes, "{family} r={r} k={k:?}");
        }
    }

    #[test]
    fn hand_checked_instances() {
        let c = fast_check(GroupFamily::SpR, 2, None, true, true).unwrap();
        assert_eq!(c.k_direct, Some(6));
        assert_eq!(c.k_closed, ratio(19, 3));
        assert_eq!(c.identities_ok, Some(true));

        let c = fast_check(GroupFamily::SlR, 2, None, true, true).unwrap();
        assert_eq!(c.k_direct, Some(5));
        assert_eq!(c.k_closed, ratio(11, 2));
    }

    #[test]
    fn stable_limits_at_large_k() {
        let million = 1_000_000;
        // SO(r, r+k) -> r/4
        let ratio_so = stable_limit_ratio(GroupFamily::SoRK, 4, million).unwrap();
        let diff = (ratio_so - int(1)).abs();
        assert!(diff < ratio(1, 1000));

        // SU(r, r+k) -> r/2
        let ratio_su = stable_limit_ratio(GroupFamily::SuRK, 4, million).unwrap();
        assert!((ratio_su - int(2)).abs() < ratio(1, 1000));

        // Sp(r, r+k) -> r/2
        let ratio_sp = stable_limit_ratio(GroupFamily::SpRK, 2, million).unwrap();
        assert!((ratio_sp - int(1)).abs() < ratio(1, 1000));

        assert!(matches!(
            stable_limit_ratio(GroupFamily::SpC, 2, million),
            Err(Error::InvalidParameter { .. })
        ));
    }

    #[test]
    fn so_rk_exact_ratio_at_rank_four() {
        // at r = 4 the orthogonal ratio equals r/4 = 1 exactly for every k
        for k in [1, 2, 10, 1000] {
            assert_eq!(
                stable_limit_ratio(GroupFamily::SoRK, 4, k).unwrap(),
                int(1)
            );
        }
    }
}
