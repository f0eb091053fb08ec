//! Reference closed forms of `<Theta, 2rho - Theta>` and `ell` per family
//! and rank parity, as polynomials in `r` (and `k`), plus the printed
//! values they are checked against.
//!
//! `pairing_ref` / `ell_ref` are what the root data actually sums to; a
//! `*_printed` entry is present exactly where the printed table value
//! disagrees with the root data, and verification reports that disagreement
//! as a finding instead of resolving it either way. Two such locations
//! exist: the split `C_r` pairing (printed `r^2 - r`, computed `r^2`) and
//! the even-rank `SO(2r+1, C)` case, whose printed pairing and `ell` both
//! miss the `Theta`-subtraction in the first half of the coordinates.
//!
//! `min_rank` is where the closed forms become exact: the `ell` formulas of
//! the orthogonal families read the two leading coordinates of
//! `2rho - Theta` from the generic coefficient pattern, which requires the
//! second coordinate to lie in the pre-`Theta` block (`r >= 4` even,
//! `r >= 5` odd). Below that the exact `ell` differs and only the
//! per-instance sweep covers those ranks.

use alloc::vec;
use alloc::vec::Vec;

use crate::catalog::GroupFamily;
use crate::poly::ExactPoly;
use crate::sos::Parity;

/// How the parameter `k` enters a fit class.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum KMode {
    /// family takes no parameter
    NoK,
    /// parametric family pinned at a single `k` (the split `B` column is
    /// `SO(r, r+1)`, the reduced unitary/symplectic columns are `k = 0`)
    Fixed(u32),
    /// bivariate fit over a grid of `k >= 1`
    Grid,
}

/// One family/parity class with its reference formulas.
#[derive(Clone, Debug)]
pub struct FitClass {
    pub family: GroupFamily,
    pub label: &'static str,
    pub parity: Parity,
    pub k_mode: KMode,
    /// smallest rank at which the closed forms are exact
    pub min_rank: u32,
    pub pairing_ref: ExactPoly,
    pub ell_ref: ExactPoly,
    /// printed value, where it differs from the computed reference
    pub pairing_printed: Option<ExactPoly>,
    pub ell_printed: Option<ExactPoly>,
}

fn p(terms: &[(u32, u32, i64, i64)]) -> ExactPoly {
    ExactPoly::from_terms(terms)
}

/// Reference fit classes of a family.
pub fn fit_classes(family: GroupFamily) -> Vec<FitClass> {
    use GroupFamily::*;
    use KMode::*;
    use Parity::*;
    let class = |label, parity, k_mode, min_rank, pairing_ref, ell_ref| FitClass {
        family,
        label,
        parity,
        k_mode,
        min_rank,
        pairing_ref,
        ell_ref,
        pairing_printed: None,
        ell_printed: None,
    };
    match family {
        SlR => vec![class(
            "SL(r+1,R)",
            Any,
            NoK,
            2,
            // r(r+1)/4
            p(&[(2, 0, 1, 4), (1, 0, 1, 4)]),
            // 2r - 1
            p(&[(1, 0, 2, 1), (0, 0, -1, 1)]),
        )],
        SlC => vec![
            class(
                "SL(r+1,C), odd r",
                Odd,
                NoK,
                3,
                // (2r+1)(r+1)/4
                p(&[(2, 0, 1, 2), (1, 0, 3, 4), (0, 0, 1, 4)]),
                // 4r - 1
                p(&[(1, 0, 4, 1), (0, 0, -1, 1)]),
            ),
            class(
                "SL(r+1,C), even r",
                Even,
                NoK,
                2,
                // (2r+3)r/4
                p(&[(2, 0, 1, 2), (1, 0, 3, 4)]),
                p(&[(1, 0, 4, 1), (0, 0, -1, 1)]),
            ),
        ],
        SuStar => vec![
            class(
                "SU*(2r+2), odd r",
                Odd,
                NoK,
                3,
                // (4r+3)(r+1)/4
                p(&[(2, 0, 1, 1), (1, 0, 7, 4), (0, 0, 3, 4)]),
                // 8r - 1
                p(&[(1, 0, 8, 1), (0, 0, -1, 1)]),
            ),
            class(
                "SU*(2r+2), even r",
                Even,
                NoK,
                2,
                // (4r+7)r/4
                p(&[(2, 0, 1, 1), (1, 0, 7, 4)]),
                p(&[(1, 0, 8, 1), (0, 0, -1, 1)]),
            ),
        ],
        SoRK => vec![
            class(
                "SO(r,r+1) (split B)",
                Any,
                Fixed(1),
                4,
                // r(3r-2)/4
                p(&[(2, 0, 3, 4), (1, 0, -1, 2)]),
                // 4r - 6
                p(&[(1, 0, 4, 1), (0, 0, -6, 1)]),
            ),
            class(
                "SO(r,r+k)",
                Any,
                Grid,
                4,
                // r(3r-4+2k)/4
                p(&[(2, 0, 3, 4), (1, 0, -1, 1), (1, 1, 1, 2)]),
                // 4r - 8 + 2k
                p(&[(1, 0, 4, 1), (0, 0, -8, 1), (0, 1, 2, 1)]),
            ),
        ],
        SoOddC => vec![
            class(
                "SO(2r+1,C), odd r",
                Odd,
                NoK,
                5,
                // (6r^2 - 2r - 1)/4
                p(&[(2, 0, 3, 2), (1, 0, -1, 2), (0, 0, -1, 4)]),
                // 8r - 10
                p(&[(1, 0, 8, 1), (0, 0, -10, 1)]),
            ),
            FitClass {
                family,
                label: "SO(2r+1,C), even r",
                parity: Even,
                k_mode: NoK,
                min_rank: 4,
                // (3r^2 - r)/2 computed; 3r^2/2 printed
                pairing_ref: p(&[(2, 0, 3, 2), (1, 0, -1, 2)]),
                // 8r - 10 computed; 8r - 8 printed
                ell_ref: p(&[(1, 0, 8, 1), (0, 0, -10, 1)]),
                pairing_printed: Some(p(&[(2, 0, 3, 2)])),
                ell_printed: Some(p(&[(1, 0, 8, 1), (0, 0, -8, 1)])),
            },
        ],
        SpR => vec![FitClass {
            family,
            label: "Sp(r,R) (split C)",
            parity: Any,
            k_mode: NoK,
            min_rank: 2,
            // r^2 computed; r(r-1) printed
            pairing_ref: p(&[(2, 0, 1, 1)]),
            // 4r - 2
            ell_ref: p(&[(1, 0, 4, 1), (0, 0, -2, 1)]),
            pairing_printed: Some(p(&[(2, 0, 1, 1), (1, 0, -1, 1)])),
            ell_printed: None,
        }],
        SpC => vec![class(
            "Sp(r,C)",
            Any,
            NoK,
            2,
            // (2r+1)r
            p(&[(2, 0, 2, 1), (1, 0, 1, 1)]),
            // 8r - 2
            p(&[(1, 0, 8, 1), (0, 0, -2, 1)]),
        )],
        SuRK => vec![
            class(
                "SU(r,r)",
                Any,
                Fixed(0),
                2,
                // (2r-1)r
                p(&[(2, 0, 2, 1), (1, 0, -1, 1)]),
                // 8r - 6
                p(&[(1, 0, 8, 1), (0, 0, -6, 1)]),
            ),
            class(
                "SU(r,r+k)",
                Any,
                Grid,
                2,
                // (2r+2k-1)r
                p(&[(2, 0, 2, 1), (1, 1, 2, 1), (1, 0, -1, 1)]),
                // 8r + 4k - 6
                p(&[(1, 0, 8, 1), (0, 1, 4, 1), (0, 0, -6, 1)]),
            ),
        ],
        SpRK => vec![
            class(
                "Sp(r,r)",
                Any,
                Fixed(0),
                2,
                // (4r+1)r
                p(&[(2, 0, 4, 1), (1, 0, 1, 1)]),
                // 16r - 6
                p(&[(1, 0, 16, 1), (0, 0, -6, 1)]),
            ),
            class(
                "Sp(r,r+k)",
                Any,
                Grid,
                2,
                // (4r+4k+1)r
                p(&[(2, 0, 4, 1), (1, 1, 4, 1), (1, 0, 1, 1)]),
                // 16r + 8k - 6
                p(&[(1, 0, 16, 1), (0, 1, 8, 1), (0, 0, -6, 1)]),
            ),
        ],
        SoStar4r => vec![class(
            "SO*(4r)",
            Any,
            NoK,
            2,
            // (4r-3)r
            p(&[(2, 0, 4, 1), (1, 0, -3, 1)]),
            // 16r - 14
            p(&[(1, 0, 16, 1), (0, 0, -14, 1)]),
        )],
        SoStar4r2 => vec![class(
            "SO*(4r+2)",
            Any,
            NoK,
            2,
            // (4r+1)r
            p(&[(2, 0, 4, 1), (1, 0, 1, 1)]),
            // 16r - 6
            p(&[(1, 0, 16, 1), (0, 0, -6, 1)]),
        )],
        SoRR => vec![
            class(
                "SO(r,r) (split D), odd r",
                Odd,
                NoK,
                5,
                // 3(r-1)^2/4
                p(&[(2, 0, 3, 4), (1, 0, -3, 2), (0, 0, 3, 4)]),
                // 4r - 8
                p(&[(1, 0, 4, 1), (0, 0, -8, 1)]),
            ),
            class(
                "SO(r,r) (split D), even r",
                Even,
                NoK,
                4,
                // r(3r-4)/4
                p(&[(2, 0, 3, 4), (1, 0, -1, 1)]),
                p(&[(1, 0, 4, 1), (0, 0, -8, 1)]),
            ),
        ],
        SoEvenC => vec![
            class(
                "SO(2r,C), odd r",
                Odd,
                NoK,
                5,
                // (3r-2)(r-1)/2
                p(&[(2, 0, 3, 2), (1, 0, -5, 2), (0, 0, 1, 1)]),
                // 8r - 14
                p(&[(1, 0, 8, 1), (0, 0, -14, 1)]),
            ),
            class(
                "SO(2r,C), even r",
                Even,
                NoK,
                4,
                // 3r(r-1)/2
                p(&[(2, 0, 3, 2), (1, 0, -3, 2)]),
                p(&[(1, 0, 8, 1), (0, 0, -14, 1)]),
            ),
        ],
    }
}
