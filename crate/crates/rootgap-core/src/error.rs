//! Error type shared by all modules.

use alloc::string::String;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },

    #[error("underdetermined fit: {monomials} monomials need more than {samples} samples")]
    InsufficientSamples { monomials: usize, samples: usize },

    #[error("degree bound exceeded: holdout sample is inconsistent with the fitted polynomial")]
    DegreeBoundExceeded,

    #[error("empty range")]
    EmptyRange,

    #[error("{family} requires rank >= {min}, got {rank}")]
    UnsupportedRank {
        family: &'static str,
        min: u32,
        rank: u32,
    },

    #[error("multiplicity pattern does not match family {family}")]
    PatternMismatch { family: &'static str },

    #[error("vector is not a root of the system")]
    NotARoot,

    #[error("rank {rank} exceeds the exhaustive search cap {cap}; use the closed form instead or raise the cap")]
    SearchCapExceeded { rank: u32, cap: u32 },

    #[error("strongly orthogonal oracle is ambiguous: {dominant} dominant half-sums among {total} maximum systems")]
    OracleAmbiguity { dominant: usize, total: usize },

    #[error("unknown family `{0}`")]
    UnknownFamily(String),

    #[error("invalid parameters for {family}: {reason}")]
    InvalidParameter {
        family: &'static str,
        reason: &'static str,
    },

    #[error("critical index is infeasible: no index up to n works (the Theta pairing is not positive)")]
    Infeasible,

    #[error("degenerate system: the maximal root pairing is not positive")]
    Degenerate,

    #[error("integer overflow in the scaled fast path")]
    Overflow,
}
