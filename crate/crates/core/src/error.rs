use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("inadmissible type {family}{rank}: {reason}")]
    InadmissibleType {
        family: char,
        rank: usize,
        reason: &'static str,
    },

    #[error("cannot parse type string {0:?} (expected e.g. \"B4\", \"F4\", \"G2\")")]
    ParseType(String),

    #[error("{0:?} is not a root of the system")]
    NotARoot(Vec<i64>),

    #[error("{0:?} is not a positive root of the system")]
    NotPositive(Vec<i64>),

    #[error("vector has length {got}, expected rank {rank}")]
    RankMismatch { got: usize, rank: usize },

    #[error("letter {letter} out of range 0..={rank}")]
    LetterOutOfRange { letter: usize, rank: usize },

    #[error("simple root index {index} out of range for rank {rank}")]
    IndexOutOfRange { index: usize, rank: usize },

    #[error("no short dominant root: {0} is simply laced")]
    SimplyLaced(String),

    #[error("rootlet undefined for the empty ideal")]
    RootletUndefined,

    #[error("ideal is not long")]
    NotLong,

    #[error("ambiguous region: point lies on the wall {0}")]
    AmbiguousRegion(String),

    #[error("guard exceeded: {what} is {got}, limit {limit}; {hint}")]
    GuardExceeded {
        what: &'static str,
        got: usize,
        limit: usize,
        hint: &'static str,
    },

    #[error("unsupported type {0} for this operation")]
    UnsupportedType(String),

    #[error("gl_n block shape needs 1 <= r < n, got n={n} r={r}")]
    BlockShape { n: usize, r: usize },

    #[error("invariant violated: {0}")]
    InvariantViolation(String),
}
