use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("representation mixes ranks {expected} and {found}")]
    MixedRank { expected: usize, found: usize },
    #[error("rank must be positive")]
    ZeroRank,
    #[error("exterior power {k} exceeds dimension {dim}")]
    WedgeTooLarge { k: u32, dim: u128 },
    #[error("direct sum needs at least one summand")]
    EmptySum,
    #[error("representation is not homogeneous; degrees found: {0:?}")]
    Inhomogeneous(Vec<i64>),
    #[error("summand {index} has non-positive degree {degree}")]
    NonPositiveDegree { index: usize, degree: i64 },
    #[error("no non-negative solution of sum nu_i*alpha_i = {kappa}")]
    NoSolutions { kappa: u32 },

    #[error("index {i} out of range 1..{r}")]
    IndexOutOfRange { i: usize, r: usize },
    #[error("weight vector entries are not non-decreasing")]
    NotOrdered,
    #[error("weight vector entries do not sum to zero")]
    NonZeroSum,
    #[error("length mismatch: expected {expected}, found {found}")]
    LengthMismatch { expected: usize, found: usize },
    #[error("empty support: the decoration vanishes identically")]
    EmptySupport,
    #[error("filtration ranks must strictly increase inside 1..{r}")]
    RankOrder { r: usize },
    #[error("weights must be positive")]
    NonPositiveWeight,

    #[error("character is not an element of the state subset")]
    ChiNotInA,
    #[error("{subsets} state subsets exceed the budget {budget}")]
    TooManyStates { subsets: u128, budget: u128 },
    #[error("integer overflow while converting a generator")]
    Overflow,

    #[error("weights sigma must be positive and sum to 1")]
    SigmaNotNormalized,
    #[error("delta must be positive")]
    NonpositiveDelta,
    #[error("rank {0} is not supported here (need r >= 2)")]
    InvalidRank(usize),
    #[error("invalid profile input: {0}")]
    InvalidProfile(String),
    #[error("restriction flags are inconsistent: {0}")]
    InconsistentFlags(String),
    #[error("restriction flags match no critical filtration type")]
    NoCriticalType,
}
