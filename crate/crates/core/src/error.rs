use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("malformed input: {0}")]
    MalformedInput(String),

    #[error("modulus must be at least 2 (got {0})")]
    InvalidModulus(i64),

    #[error("operation requires a finite modulus e")]
    InfiniteModulus,

    #[error("expected level {expected}, found {found}")]
    LevelMismatch { expected: usize, found: usize },

    #[error("index {index} out of range for level {level}")]
    IndexOutOfRange { index: usize, level: usize },

    #[error("partition {partition} is not {e}-regular")]
    NotRegular { partition: String, e: i64 },

    #[error("component {component} is not {e}-regular")]
    NotRegularComponent { component: usize, e: i64 },

    #[error("multipartition {0} is not a Kleshchev multipartition for this charge class")]
    NotKleshchev(String),

    #[error("multipartition {0} is not a vertex of the highest-weight crystal")]
    NotInCrystal(String),

    #[error("no good node at step {step} of the path")]
    DeadEnd { step: usize },

    #[error("layer {layer} has {size} vertices, cap is {cap}")]
    LayerCapExceeded { layer: usize, size: usize, cap: usize },

    #[error("pairing ran out of candidates")]
    MatchExhausted,

    #[error("symbol shift m = {m} is too small (need m >= {min})")]
    InvalidM { m: i64, min: i64 },

    #[error("not a symbol: {0}")]
    NotASymbol(String),

    #[error("translation orbit did not stabilize within {bound} steps")]
    NoStabilization { bound: usize },

    #[error("rank {n} is smaller than the multipartition rank {rank}")]
    RankTooSmall { n: usize, rank: usize },

    #[error("internal invariant violated: {0}")]
    InvariantViolated(String),
}

impl Error {
    /// Stable machine-readable name of the variant.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::MalformedInput(_) => "MalformedInput",
            Error::InvalidModulus(_) => "InvalidModulus",
            Error::InfiniteModulus => "InfiniteModulus",
            Error::LevelMismatch { .. } => "LevelMismatch",
            Error::IndexOutOfRange { .. } => "IndexOutOfRange",
            Error::NotRegular { .. } => "NotRegular",
            Error::NotRegularComponent { .. } => "NotRegularComponent",
            Error::NotKleshchev(_) => "NotKleshchev",
            Error::NotInCrystal(_) => "NotInCrystal",
            Error::DeadEnd { .. } => "DeadEnd",
            Error::LayerCapExceeded { .. } => "LayerCapExceeded",
            Error::MatchExhausted => "MatchExhausted",
            Error::InvalidM { .. } => "InvalidM",
            Error::NotASymbol(_) => "NotASymbol",
            Error::NoStabilization { .. } => "NoStabilization",
            Error::RankTooSmall { .. } => "RankTooSmall",
            Error::InvariantViolated(_) => "InvariantViolated",
        }
    }
}
