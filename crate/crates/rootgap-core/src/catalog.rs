//! The thirteen families of non-compact simple real Lie groups with
//! classical restricted root systems, mapped to their restricted types,
//! multiplicity patterns, type constants, and independently coded symmetric
//! space dimensions, plus rank-trivial stubs for the exceptional forms.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::error::Error;
use crate::rational::{ratio, Rational};
use crate::rootsys::{Family, MultiplicityPattern, RestrictedType, RootSystem};
use crate::Result;

/// One of the thirteen classical group families. The parametric families
/// take `k >= 0` with `s = r + k`; `k = 0` degenerates to the reduced
/// system (`SU(r,r)` and `Sp(r,r)` become type `C`, `SO(r,r)` is the
/// separate split `D` entry).
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum GroupFamily {
    /// `SL(r+1, R)`, split type `A_r`
    SlR,
    /// `SL(r+1, C)`, type `A_r`, multiplicity 2
    SlC,
    /// `SU*(2r+2)`, type `A_r`, multiplicity 4
    SuStar,
    /// `SO(r, r+k)`, `k >= 1`, type `B_r`, multiplicities `1, .., 1, k`
    SoRK,
    /// `SO(2r+1, C)`, type `B_r`, multiplicity 2
    SoOddC,
    /// `Sp(r, R)`, split type `C_r`
    SpR,
    /// `Sp(r, C)`, type `C_r`, multiplicity 2
    SpC,
    /// `SU(r, r+k)`, type `(BC)_r` with `2, .., 2, (2k, 1)`; `C_r` at `k=0`
    SuRK,
    /// `Sp(r, r+k)`, type `(BC)_r` with `4, .., 4, (4k, 3)`; `C_r` at `k=0`
    SpRK,
    /// `SO*(4r)`, type `C_r`, multiplicities `4, .., 4, 1`
    SoStar4r,
    /// `SO*(4r+2)`, type `(BC)_r`, multiplicities `4, .., 4, (4, 1)`
    SoStar4r2,
    /// `SO(r, r)`, split type `D_r`
    SoRR,
    /// `SO(2r, C)`, type `D_r`, multiplicity 2
    SoEvenC,
}

use GroupFamily::*;

impl GroupFamily {
    pub const ALL: [GroupFamily; 13] = [
        SlR, SlC, SuStar, SoRK, SoOddC, SpR, SpC, SuRK, SpRK, SoStar4r, SoStar4r2, SoRR, SoEvenC,
    ];

    /// Canonical command-line / serialization token.
    pub fn token(self) -> &'static str {
        match self {
            SlR => "SLR",
            SlC => "SLC",
            SuStar => "SUstar",
            SoRK => "SO_rk",
            SoOddC => "SOoddC",
            SpR => "SpR",
            SpC => "SpC",
            SuRK => "SU_rk",
            SpRK => "Sp_rk",
            SoStar4r => "SOstar4r",
            SoStar4r2 => "SOstar4r2",
            SoRR => "SO_rr",
            SoEvenC => "SOevenC",
        }
    }

    pub fn parse(s: &str) -> Option<GroupFamily> {
        let norm = s.to_ascii_lowercase();
        Self::ALL
            .into_iter()
            .find(|f| f.token().to_ascii_lowercase() == norm)
    }

    /// Does the family carry the parameter `k` (with `s = r + k`)?
    pub fn parametric(self) -> bool {
        matches!(self, SoRK | SuRK | SpRK)
    }

    /// Smallest `k` the family accepts. `SO(r, r+k)` needs `k >= 1` in type
    /// `B`; `k = 0` resolves to the split `D` entry and therefore needs the
    /// `D` rank bound.
    pub fn min_k(self) -> u32 {
        match self {
            SoRK => 1,
            SuRK | SpRK => 0,
            _ => 0,
        }
    }

    /// Higher-rank catalog bound (`D`-based families additionally inherit
    /// the `D` rank bound).
    pub fn min_rank(self) -> u32 {
        match self {
            SoRR | SoEvenC => 4,
            _ => 2,
        }
    }

    /// Alternative spellings seen for the family name.
    pub fn aliases(self) -> &'static [&'static str] {
        match self {
            SuStar => &["SU*_{2r+2}", "SU*_{4r+2}"],
            _ => &[],
        }
    }

    /// Restricted type and multiplicity pattern at `(r, k)`.
    pub fn restricted(self, r: u32, k: Option<u32>) -> Result<(RestrictedType, MultiplicityPattern)> {
        let k = self.check_params(r, k)?;
        let t = |family| RestrictedType::new(family, r);
        Ok(match (self, k) {
            (SlR, _) => (t(Family::A)?, MultiplicityPattern::type_a(1)),
            (SlC, _) => (t(Family::A)?, MultiplicityPattern::type_a(2)),
            (SuStar, _) => (t(Family::A)?, MultiplicityPattern::type_a(4)),
            (SoRK, 0) => (t(Family::D)?, MultiplicityPattern::type_d(1)),
            (SoRK, k) => (t(Family::B)?, MultiplicityPattern::type_b(1, k)),
            (SoOddC, _) => (t(Family::B)?, MultiplicityPattern::type_b(2, 2)),
            (SpR, _) => (t(Family::C)?, MultiplicityPattern::type_c(1, 1)),
            (SpC, _) => (t(Family::C)?, MultiplicityPattern::type_c(2, 2)),
            (SuRK, 0) => (t(Family::C)?, MultiplicityPattern::type_c(2, 1)),
            (SuRK, k) => (t(Family::BC)?, MultiplicityPattern::type_bc(2, 2 * k, 1)),
            (SpRK, 0) => (t(Family::C)?, MultiplicityPattern::type_c(4, 3)),
            (SpRK, k) => (t(Family::BC)?, MultiplicityPattern::type_bc(4, 4 * k, 3)),
            (SoStar4r, _) => (t(Family::C)?, MultiplicityPattern::type_c(4, 1)),
            (SoStar4r2, _) => (t(Family::BC)?, MultiplicityPattern::type_bc(4, 4, 1)),
            (SoRR, _) => (t(Family::D)?, MultiplicityPattern::type_d(1)),
            (SoEvenC, _) => (t(Family::D)?, MultiplicityPattern::type_d(2)),
        })
    }

    fn check_params(self, r: u32, k: Option<u32>) -> Result<u32> {
        if r < self.min_rank() {
            return Err(Error::UnsupportedRank {
                family: self.token(),
                min: self.min_rank(),
                rank: r,
            });
        }
        match (self.parametric(), k) {
            (false, None) => Ok(0),
            (false, Some(_)) => Err(Error::InvalidParameter {
                family: self.token(),
                reason: "family does not take a parameter k",
            }),
            (true, None) => Err(Error::InvalidParameter {
                family: self.token(),
                reason: "family requires the parameter k",
            }),
            (true, Some(k)) => {
                if k < self.min_k() && !(self == SoRK && k == 0) {
                    return Err(Error::InvalidParameter {
                        family: self.token(),
                        reason: "k below the family minimum",
                    });
                }
                if self == SoRK && k == 0 && r < 4 {
                    // SO(r, r) is split D_r
                    return Err(Error::UnsupportedRank {
                        family: "D",
                        min: 4,
                        rank: r,
                    });
                }
                Ok(k)
            }
        }
    }

    /// The constant `c` of the gap bound, a pure function of the restricted
    /// type: `A -> 1/8`, `B, D -> 3/16`, `C, BC -> 1/4`.
    pub fn type_constant(self) -> Rational {
        match self {
            SlR | SlC | SuStar => ratio(1, 8),
            SoRK | SoOddC | SoRR | SoEvenC => ratio(3, 16),
            SpR | SpC | SuRK | SpRK | SoStar4r | SoStar4r2 => ratio(1, 4),
        }
    }

    /// Classical closed-form dimension of the symmetric space `G/K`,
    /// independent of the root data.
    pub fn classical_dimension(self, r: u32, k: Option<u32>) -> Result<u64> {
        let k = self.check_params(r, k)? as u64;
        let r = r as u64;
        Ok(match self {
            SlR => r * (r + 3) / 2,
            SlC => (r + 1) * (r + 1) - 1,
            SuStar => 2 * r * r + 3 * r,
            SoRK => r * (r + k),
            SoOddC => (2 * r + 1) * (2 * r) / 2,
            SpR => r * (r + 1),
            SpC => r * (2 * r + 1),
            SuRK => 2 * r * (r + k),
            SpRK => 4 * r * (r + k),
            SoStar4r => (2 * r) * (2 * r - 1),
            SoStar4r2 => (2 * r + 1) * (2 * r),
            SoRR => r * r,
            SoEvenC => (2 * r) * (2 * r - 1) / 2,
        })
    }

    /// Human-readable instantiated name.
    pub fn display_name(self, r: u32, k: Option<u32>) -> String {
        let k = k.unwrap_or(0);
        match self {
            SlR => format!("SL({},R)", r + 1),
            SlC => format!("SL({},C)", r + 1),
            SuStar => format!("SU*({})", 2 * r + 2),
            SoRK => format!("SO({},{})", r, r + k),
            SoOddC => format!("SO({},C)", 2 * r + 1),
            SpR => format!("Sp({},R)", r),
            SpC => format!("Sp({},C)", r),
            SuRK => format!("SU({},{})", r, r + k),
            SpRK => format!("Sp({},{})", r, r + k),
            SoStar4r => format!("SO*({})", 4 * r),
            SoStar4r2 => format!("SO*({})", 4 * r + 2),
            SoRR => format!("SO({r},{r})"),
            SoEvenC => format!("SO({},C)", 2 * r),
        }
    }

    /// Generic (uninstantiated) name.
    pub fn generic_name(self) -> &'static str {
        match self {
            SlR => "SL(r+1,R)",
            SlC => "SL(r+1,C)",
            SuStar => "SU*(2r+2)",
            SoRK => "SO(r,r+k)",
            SoOddC => "SO(2r+1,C)",
            SpR => "Sp(r,R)",
            SpC => "Sp(r,C)",
            SuRK => "SU(r,r+k)",
            SpRK => "Sp(r,r+k)",
            SoStar4r => "SO*(4r)",
            SoStar4r2 => "SO*(4r+2)",
            SoRR => "SO(r,r)",
            SoEvenC => "SO(2r,C)",
        }
    }
}

impl core::fmt::Display for GroupFamily {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.write_str(self.token())
    }
}

/// A fully instantiated group: family, parameters, restricted root data,
/// and the constant of its gap bound.
#[derive(Clone, Debug)]
pub struct GroupDescriptor {
    pub family: GroupFamily,
    pub rank: u32,
    pub k: Option<u32>,
    pub rtype: RestrictedType,
    pub pattern: MultiplicityPattern,
    pub constant: Rational,
    pub display: String,
}

/// Resolve a family at `(r, k)` to its descriptor and built root system.
pub fn resolve(
    family: GroupFamily,
    r: u32,
    k: Option<u32>,
) -> Result<(GroupDescriptor, RootSystem)> {
    let (rtype, pattern) = family.restricted(r, k)?;
    let system = RootSystem::new(rtype, pattern)?;
    Ok((
        GroupDescriptor {
            family,
            rank: r,
            k,
            rtype,
            pattern,
            constant: family.type_constant(),
            display: family.display_name(r, k),
        },
        system,
    ))
}

/// Exceptional real forms enter only through their real rank.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum ExceptionalStub {
    E6Minus26,
    E7Minus25,
    E6Minus14,
    Other { name: String, rank: u32 },
}

impl ExceptionalStub {
    pub fn name(&self) -> String {
        match self {
            ExceptionalStub::E6Minus26 => String::from("E6(-26)"),
            ExceptionalStub::E7Minus25 => String::from("E7(-25)"),
            ExceptionalStub::E6Minus14 => String::from("E6(-14)"),
            ExceptionalStub::Other { name, .. } => name.clone(),
        }
    }

    pub fn rank(&self) -> u32 {
        match self {
            ExceptionalStub::E6Minus26 | ExceptionalStub::E6Minus14 => 2,
            ExceptionalStub::E7Minus25 => 3,
            ExceptionalStub::Other { rank, .. } => *rank,
        }
    }

    /// Why the gap bound needs no root data here: real rank below 8 makes
    /// the global bound automatic, and the single rank-8 restricted type is
    /// covered by a separate result.
    pub fn note(&self) -> &'static str {
        if self.rank() < 8 {
            "rank-trivial (r < 8)"
        } else {
            "rank 8: covered by a separate result"
        }
    }
}

/// The stub list: the three named exceptional forms plus a catch-all for
/// the remaining exceptional real forms, all of real rank at most 8.
pub fn exceptional_stubs() -> Vec<ExceptionalStub> {
    alloc::vec![
        ExceptionalStub::E6Minus26,
        ExceptionalStub::E7Minus25,
        ExceptionalStub::E6Minus14,
        ExceptionalStub::Other {
            name: String::from("other exceptional"),
            rank: 8,
        },
    ]
}

/// One catalog listing entry.
#[derive(Clone, Debug)]
pub enum CatalogItem {
    Group(GroupDescriptor),
    Stub(ExceptionalStub),
}

/// Deterministic enumeration of every instantiable descriptor with rank in
/// `ranks` (and `k` in `ks` for parametric families), stubs appended.
/// Family bounds silently filter instances; empty input ranges are domain
/// errors.
pub fn list_catalog(ranks: (u32, u32), ks: (u32, u32)) -> Result<Vec<CatalogItem>> {
    if ranks.0 > ranks.1 || ks.0 > ks.1 {
        return Err(Error::EmptyRange);
    }
    let mut items = Vec::new();
    for family in GroupFamily::ALL {
        for r in ranks.0.max(family.min_rank())..=ranks.1 {
            if family.parametric() {
                for k in ks.0.max(family.min_k())..=ks.1 {
                    if let Ok((desc, _)) = resolve(family, r, Some(k)) {
                        items.push(CatalogItem::Group(desc));
                    }
                }
            } else if let Ok((desc, _)) = resolve(family, r, None) {
                items.push(CatalogItem::Group(desc));
            }
        }
    }
    items.extend(exceptional_stubs().into_iter().map(CatalogItem::Stub));
    Ok(items)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;

    #[test]
    fn resolve_examples() {
        let (d, s) = resolve(SpC, 3, None).unwrap();
        assert_eq!(d.rtype.family, Family::C);
        assert_eq!(s.pattern().pair(), 2);
        assert_eq!(s.pattern().double(), Some(2));

        let (_, s) = resolve(SoStar4r, 2, None).unwrap();
        assert_eq!(s.pattern().pair(), 4);
        assert_eq!(s.pattern().double(), Some(1));

        let (d, s) = resolve(SpRK, 2, Some(1)).unwrap();
        assert_eq!(d.rtype.family, Family::BC);
        assert_eq!(s.pattern().pair(), 4);
        assert_eq!(s.pattern().single(), Some(4));
        assert_eq!(s.pattern().double(), Some(3));
    }

    #[test]
    fn k_zero_degenerations() {
        let (d, s) = resolve(SuRK, 3, Some(0)).unwrap();
        assert_eq!(d.rtype.family, Family::C);
        assert_eq!(s.pattern().pair(), 2);
        assert_eq!(s.pattern().double(), Some(1));

        let (d, _) = resolve(SoRK, 4, Some(0)).unwrap();
        assert_eq!(d.rtype.family, Family::D);
        assert!(matches!(
            resolve(SoRK, 3, Some(0)),
            Err(Error::UnsupportedRank { .. })
        ));
    }

    #[test]
    fn parameter_validation() {
        assert!(matches!(
            resolve(SpC, 3, Some(1)),
            Err(Error::InvalidParameter { .. })
        ));
        assert!(matches!(
            resolve(SuRK, 3, None),
            Err(Error::InvalidParameter { .. })
        ));
        assert!(matches!(
            resolve(SoRR, 3, None),
            Err(Error::UnsupportedRank { .. })
        ));
    }

    #[test]
    fn classical_dimension_examples() {
        assert_eq!(SlR.classical_dimension(3, None).unwrap(), 9);
        assert_eq!(SuRK.classical_dimension(2, Some(1)).unwrap(), 12);
        assert_eq!(SoRK.classical_dimension(3, Some(1)).unwrap(), 12);
    }

    #[test]
    fn dimension_from_roots_matches_classical_formula() {
        for family in GroupFamily::ALL {
            for r in family.min_rank()..=40 {
                let ks: &[Option<u32>] = if family.parametric() {
                    &[Some(1), Some(2), Some(7), Some(20)]
                } else {
                    &[None]
                };
                for &k in ks {
                    let (_, s) = resolve(family, r, k).unwrap();
                    assert_eq!(
                        s.symmetric_space_dim(),
                        family.classical_dimension(r, k).unwrap(),
                        "{family} r={r} k={k:?}"
                    );
                }
            }
        }
    }

    #[test]
    fn constants_follow_restricted_type() {
        for family in GroupFamily::ALL {
            let k = if family.parametric() { Some(1) } else { None };
            let (d, _) = resolve(family, 4, k).unwrap();
            let expected = match d.rtype.family {
                Family::A => ratio(1, 8),
                Family::B | Family::D => ratio(3, 16),
                Family::C | Family::BC => ratio(1, 4),
            };
            assert_eq!(d.constant, expected, "{family}");
        }
        assert_eq!(SoStar4r.type_constant(), ratio(1, 4));
        assert_eq!(SoRK.type_constant(), ratio(3, 16));
    }

    #[test]
    fn listing_filters_family_bounds() {
        let items = list_catalog((4, 4), (1, 2)).unwrap();
        let names: Vec<String> = items
            .iter()
            .filter_map(|i| match i {
                CatalogItem::Group(d) => Some(d.display.clone()),
                CatalogItem::Stub(_) => None,
            })
            .collect();
        assert!(names.contains(&String::from("SO(4,5)")));
        assert!(names.contains(&String::from("SO(4,6)")));

        // D-based families are omitted below rank 4
        let items = list_catalog((3, 3), (1, 1)).unwrap();
        assert!(items.iter().all(|i| match i {
            CatalogItem::Group(d) => d.family != SoRR && d.family != SoEvenC,
            CatalogItem::Stub(_) => true,
        }));

        // stubs are always present and flagged
        assert!(items.iter().any(|i| matches!(
            i,
            CatalogItem::Stub(s) if s.name() == "E6(-26)" && s.rank() == 2
        )));
        assert!(matches!(list_catalog((3, 2), (1, 1)), Err(Error::EmptyRange)));
    }

    #[test]
    fn token_round_trip() {
        for family in GroupFamily::ALL {
            assert_eq!(GroupFamily::parse(family.token()), Some(family));
            assert_eq!(
                GroupFamily::parse(&family.token().to_ascii_uppercase()),
                Some(family)
            );
        }
        assert_eq!(GroupFamily::parse("nope"), None);
    }

    #[test]
    fn stub_data() {
        let stubs = exceptional_stubs();
        assert_eq!(stubs.len(), 4);
        assert_eq!(stubs[0].rank(), 2);
        assert_eq!(stubs[1].rank(), 3);
        assert_eq!(stubs[0].note(), "rank-trivial (r < 8)");
        assert_eq!(int(1), int(1));
    }
}
