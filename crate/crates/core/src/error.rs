use thiserror::Error;

use crate::weight::DominanceViolation;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("rank mismatch: expected m = {expected}, got m = {found}")]
    RankMismatch { expected: usize, found: usize },

    #[error("rank {0} is outside the supported range 1..={max}", max = crate::MAX_RANK)]
    UnsupportedRank(usize),

    #[error("cannot parse weight: {reason} (at `{token}`)")]
    Parse { token: String, reason: String },

    #[error("weight is not dominant integral: {0}")]
    NotDominant(DominanceViolation),

    #[error("weight {0} is not g0-dominant integral")]
    NotG0Dominant(String),

    #[error("weight {0} has half-integer entries")]
    NotIntegral(String),

    #[error("weight {0} is typical")]
    Typical(String),

    #[error("weight {0} is a tail atypical weight")]
    Tail(String),

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("monomial of x-degree {0} has no truncatable geometric series")]
    NonTruncatable(i64),

    #[error("product of truncated series with unknown lower bounds has no sound cutoff")]
    UnsoundCutoff,

    #[error("exact division failed: {0}")]
    InexactDivision(String),

    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
