//! The gap bounds: `w = 2rho - Theta`, the pairing `<Theta, w>`, the
//! maximal root pairing `ell`, the critical-index bound both by sorted
//! partial sums and in closed form `n + 1 - <Theta, w>/ell`, and the strict
//! type-constant inequality `<Theta, w>/ell > c*r` behind the homological
//! dimension gap.
//!
//! Two independent computation routes exist. The generic route in this
//! module works on a materialized [`RootSystem`] in big-rational
//! arithmetic. The [`fast`] route recomputes everything from per-coordinate
//! closed forms in overflow-checked scaled integers and makes rank sweeps
//! into the thousands cheap; the two routes are cross-checked for exact
//! equality on a shared range by the test suite.

pub mod fast;
pub mod references;
pub mod verify;

use alloc::vec::Vec;

use num_traits::{Signed, Zero};

use crate::catalog::GroupDescriptor;
use crate::error::Error;
use crate::rational::{int, Rational};
use crate::rootsys::RootSystem;
use crate::sos::{is_dominant, theta_closed};
use crate::vector::WeightVector;
use crate::Result;

pub use fast::{fast_check, fast_report, stable_limit_ratio, FastCheck};
pub use verify::{
    global_gap_summary, verify_all, verify_family, FamilyVerification, Finding, FitOutcome,
    GapSummary, InstanceFailure, VerificationReport, VerifyOptions,
};

/// Everything derived for one group instance.
#[derive(Clone, Debug)]
pub struct BoundReport {
    pub group: GroupDescriptor,
    /// dimension of the symmetric space
    pub n: u64,
    pub two_rho: WeightVector,
    pub theta: WeightVector,
    /// `2rho - Theta`
    pub w: WeightVector,
    /// `<Theta, w>`
    pub theta_pairing: Rational,
    /// maximal `<alpha, w>` over the positive roots
    pub ell: Rational,
    /// minimal index from sorted partial sums; `None` when skipped above
    /// the configured rank cap of a sweep
    pub k_direct: Option<u64>,
    /// `n + 1 - <Theta, w>/ell`, kept exact rather than floored
    pub k_closed: Rational,
    /// type constant `c`
    pub constant: Rational,
    /// `<Theta, w>/ell - c*r`; the bound holds strictly iff this is positive
    pub margin: Rational,
    /// `n - c*r`
    pub hd_strict_upper: Rational,
    /// `n - r`, the value no bound of this shape can beat
    pub sharpness_reference: u64,
    pub passes: bool,
}

/// `2rho - Theta` of the system.
pub fn w_vector(s: &RootSystem) -> WeightVector {
    s.two_rho()
        .sub(&theta_closed(s))
        .expect("two_rho and theta share the ambient dimension")
}

/// `<Theta, 2rho - Theta>`, strictly positive on every catalog system.
pub fn theta_pairing(s: &RootSystem) -> Rational {
    let w = w_vector(s);
    let p = theta_closed(s).dot(&w).expect("matching dimensions");
    assert!(p.is_positive(), "Theta pairing must be positive");
    p
}

/// `ell = max <alpha, 2rho - Theta>` over the positive roots. When `w` is
/// dominant (it always is on the catalog) this is the highest-root pairing;
/// otherwise the maximum is taken over all of them.
pub fn ell(s: &RootSystem) -> Result<Rational> {
    let w = w_vector(s);
    ell_for(s, &w)
}

fn ell_for(s: &RootSystem, w: &WeightVector) -> Result<Rational> {
    let coords = w.coords();
    let val = if is_dominant(w, s) {
        s.highest_root().value(coords)
    } else {
        s.positive_roots()
            .iter()
            .map(|&(a, _)| a.value(coords))
            .max()
            .expect("systems have positive roots")
    };
    if !val.is_positive() {
        return Err(Error::Degenerate);
    }
    Ok(val)
}

/// Minimal `t` such that the sum of the `t` smallest values (each entry
/// counted with its multiplicity) strictly exceeds `target`, returned as
/// the index `rank + t`. The sort is stable so ties keep canonical root
/// order, which cannot change the sums. `None` crossing means the total
/// never exceeds the target, i.e. the Theta pairing was not positive.
pub fn critical_index_from_values(
    mut values: Vec<(Rational, u32)>,
    target: &Rational,
    rank: u32,
) -> Result<u64> {
    values.sort_by(|a, b| a.0.cmp(&b.0));
    let mut sum = Rational::zero();
    let mut taken: u64 = 0;
    for (v, mult) in &values {
        let whole = v * int(*mult as i64);
        if &(&sum + &whole) > target {
            for _ in 0..*mult {
                sum += v;
                taken += 1;
                if &sum > target {
                    return Ok(rank as u64 + taken);
                }
            }
            unreachable!("crossing must occur inside the group");
        }
        sum += whole;
        taken += *mult as u64;
    }
    Err(Error::Infeasible)
}

/// Direct critical-index bound: scan the sorted root pairings against
/// `<w, w>`. Rescaling by `|w|` keeps the comparison rational.
pub fn critical_index_direct(s: &RootSystem) -> Result<u64> {
    let w = w_vector(s);
    let coords = w.coords();
    let values: Vec<(Rational, u32)> = s
        .positive_roots()
        .iter()
        .map(|&(a, m)| (a.value(coords), m))
        .collect();
    critical_index_from_values(values, &w.norm_sq(), s.rank())
}

/// Closed-form bound `n + 1 - pairing/ell`, exact.
pub fn critical_index_closed(pairing: &Rational, ell: &Rational, n: u64) -> Result<Rational> {
    if !ell.is_positive() {
        return Err(Error::Degenerate);
    }
    Ok(int(n as i64 + 1) - pairing / ell)
}

/// Full report for one catalog instance, generic route.
pub fn compute_report(g: &GroupDescriptor) -> Result<BoundReport> {
    let system = RootSystem::new(g.rtype, g.pattern)?;
    let two_rho = system.two_rho();
    let theta = theta_closed(&system);
    let w = two_rho.sub(&theta)?;
    let pairing = theta.dot(&w)?;
    assert!(pairing.is_positive(), "Theta pairing must be positive");
    let ell = ell_for(&system, &w)?;
    let n = system.symmetric_space_dim();
    let k_direct = critical_index_direct(&system)?;
    let k_closed = critical_index_closed(&pairing, &ell, n)?;
    assert!(
        int(k_direct as i64) <= k_closed,
        "direct index exceeds the closed-form bound for {}",
        g.display
    );
    let margin = &pairing / &ell - &g.constant * int(g.rank as i64);
    let passes = margin.is_positive();
    Ok(BoundReport {
        n,
        two_rho,
        theta,
        w,
        theta_pairing: pairing,
        ell,
        k_direct: Some(k_direct),
        k_closed,
        constant: g.constant.clone(),
        margin,
        hd_strict_upper: int(n as i64) - &g.constant * int(g.rank as i64),
        sharpness_reference: n - g.rank as u64,
        passes,
        group: g.clone(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{resolve, GroupFamily};
    use crate::rational::ratio;

    fn report(family: GroupFamily, r: u32, k: Option<u32>) -> BoundReport {
        let (desc, _) = resolve(family, r, k).unwrap();
        compute_report(&desc).unwrap()
    }

    #[test]
    fn w_vector_examples() {
        let (_, s) = resolve(GroupFamily::SpR, 3, None).unwrap();
        assert_eq!(w_vector(&s), WeightVector::from_ints(&[5, 3, 1]));

        let (_, s) = resolve(GroupFamily::SuRK, 3, Some(0)).unwrap();
        assert_eq!(w_vector(&s), WeightVector::from_ints(&[9, 5, 1]));

        let (_, s) = resolve(GroupFamily::SlR, 2, None).unwrap();
        assert_eq!(
            w_vector(&s),
            WeightVector::from_ratios(&[(3, 2), (0, 1), (-3, 2)])
        );
    }

    #[test]
    fn theta_pairing_examples() {
        let (_, s) = resolve(GroupFamily::SpC, 3, None).unwrap();
        assert_eq!(theta_pairing(&s), int(21));

        let (_, s) = resolve(GroupFamily::SoStar4r, 2, None).unwrap();
        assert_eq!(theta_pairing(&s), int(10));

        // split C_r sums to r^2 from the root data
        let (_, s) = resolve(GroupFamily::SpR, 3, None).unwrap();
        assert_eq!(theta_pairing(&s), int(9));
    }

    #[test]
    fn ell_examples() {
        let (_, s) = resolve(GroupFamily::SoRK, 4, Some(1)).unwrap();
        assert_eq!(ell(&s).unwrap(), int(10));

        let (_, s) = resolve(GroupFamily::SuRK, 3, Some(0)).unwrap();
        assert_eq!(ell(&s).unwrap(), int(18));

        let (_, s) = resolve(GroupFamily::SpRK, 2, Some(1)).unwrap();
        assert_eq!(ell(&s).unwrap(), int(34));
    }

    #[test]
    fn direct_index_hand_cases() {
        // Sp_2(R): values with multiplicity (2,2,4,6), <w,w> = 10
        assert_eq!(report(GroupFamily::SpR, 2, None).k_direct, Some(6));
        // SL_3(R): values (3/2, 3/2, 3), <w,w> = 9/2
        assert_eq!(report(GroupFamily::SlR, 2, None).k_direct, Some(5));
    }

    #[test]
    fn direct_index_infeasible_when_total_is_too_small() {
        let values = alloc::vec![(int(1), 2u32), (int(3), 1u32)];
        assert_eq!(
            critical_index_from_values(values, &int(100), 2),
            Err(Error::Infeasible)
        );
    }

    #[test]
    fn direct_index_crossing_inside_a_group() {
        // values 1 x4: prefix sums 1,2,3,4; target 5/2 crossed at t=3
        let values = alloc::vec![(int(1), 4u32)];
        assert_eq!(
            critical_index_from_values(values, &ratio(5, 2), 2).unwrap(),
            5
        );
    }

    #[test]
    fn closed_index_examples() {
        let rep = report(GroupFamily::SpR, 2, None);
        assert_eq!(rep.k_closed, ratio(19, 3));

        let rep = report(GroupFamily::SlR, 2, None);
        assert_eq!(rep.k_closed, ratio(11, 2));

        // SU(3,3): n = 18, pairing 15, ell 18
        let rep = report(GroupFamily::SuRK, 3, Some(0));
        assert_eq!(rep.n, 18);
        assert_eq!(rep.k_closed, int(19) - ratio(15, 18));
        assert_eq!(rep.k_closed, ratio(109, 6));
    }

    #[test]
    fn report_examples() {
        // SO(4,6): pairing 12, ell 12, ratio 1 > 3*4/16
        let rep = report(GroupFamily::SoRK, 4, Some(2));
        assert_eq!(rep.theta_pairing, int(12));
        assert_eq!(rep.ell, int(12));
        assert!(rep.passes);
        assert_eq!(rep.margin, int(1) - ratio(3, 4));

        // SO*(10): pairing 18, ell 26, ratio 9/13 > 1/2
        let rep = report(GroupFamily::SoStar4r2, 2, None);
        assert_eq!(rep.theta_pairing, int(18));
        assert_eq!(rep.ell, int(26));
        assert_eq!(rep.margin, ratio(9, 13) - ratio(1, 2));
        assert!(rep.passes);

        // Sp_3(C): margin 21/22 - 3/4 > 0
        let rep = report(GroupFamily::SpC, 3, None);
        assert_eq!(rep.margin, ratio(21, 22) - ratio(3, 4));
        assert!(rep.passes);
        assert_eq!(rep.sharpness_reference, rep.n - 3);
        assert_eq!(rep.hd_strict_upper, int(rep.n as i64) - ratio(3, 4));
    }

    #[test]
    fn identities_on_small_instances() {
        for family in GroupFamily::ALL {
            let k = if family.parametric() { Some(2) } else { None };
            let (desc, s) = resolve(family, 5, k).unwrap();
            let rep = compute_report(&desc).unwrap();

            // <2rho - w, w> = <Theta, w>
            let lhs = rep.two_rho.sub(&rep.w).unwrap().dot(&rep.w).unwrap();
            assert_eq!(lhs, rep.theta_pairing, "{family}");

            // sum over roots (with multiplicity) of <alpha, w> = <2rho, w>
            let total: Rational = s
                .positive_roots()
                .iter()
                .map(|&(a, m)| a.value(rep.w.coords()) * int(m as i64))
                .sum();
            assert_eq!(total, rep.two_rho.dot(&rep.w).unwrap(), "{family}");

            // w is dominant, so ell is the highest-root shortcut and equals
            // the full maximum
            assert!(crate::sos::is_dominant(&rep.w, &s));
            let full_max = s
                .positive_roots()
                .iter()
                .map(|&(a, _)| a.value(rep.w.coords()))
                .max()
                .unwrap();
            assert_eq!(full_max, rep.ell, "{family}");
        }
    }
}
