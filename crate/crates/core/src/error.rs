use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("budget exhausted: {what} (limit {limit})")]
    Budget { what: &'static str, limit: u64 },

    #[error("malformed input: {0}")]
    Malformed(String),

    #[error("letter {letter} out of range for alphabet of size {m}")]
    LetterOutOfRange { letter: usize, m: usize },

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("invalid affine window: {0}")]
    InvalidWindow(String),

    #[error("set is not {k}-invariant")]
    NotInvariant { k: i64 },

    #[error("collision: {0}")]
    Collision(String),

    #[error("shift vector lies on a wall of the shift arrangement: {0}")]
    OnWall(String),

    #[error("residue partition violated: {0}")]
    PartitionViolation(String),

    #[error("word is not a parking function")]
    NotParking,

    #[error("placement stalled while placing value {alpha}")]
    Stall { alpha: i64 },

    #[error("affine periodicity not detected within {budget} word applications")]
    PeriodNotDetected { budget: usize },

    #[error("extracted window failed validation: {0}")]
    WindowValidation(String),

    #[error("window outside the domain of the map: letter {letter} at position {position} is not below {m}")]
    OutsideDomain {
        letter: usize,
        position: usize,
        m: usize,
    },

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("unknown suite `{0}`")]
    UnknownSuite(String),

    #[error("internal invariant violated: {0}")]
    Invariant(String),
}

pub type Result<T> = std::result::Result<T, Error>;
