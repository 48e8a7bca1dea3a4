use thiserror::Error;

use crate::root_system::Family;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Everything that can go wrong while building or querying the combinatorial
/// data. `InvariantViolation` is reserved for broken theorems, i.e. bugs.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid root system {family}{rank}: {reason}")]
    InvalidType {
        family: Family,
        rank: usize,
        reason: String,
    },
    #[error("unknown root system family {0:?} (expected one of A, B, C, D, E, F, G)")]
    UnknownFamily(String),
    #[error("vector has length {got} but the root system has rank {rank}")]
    RankMismatch { rank: usize, got: usize },
    #[error("the zero vector has no coroot")]
    ZeroRoot,
    #[error("{0:?} is not a root of the system")]
    NotARoot(Vec<i64>),
    #[error("simple index {index} out of range 1..={rank}")]
    SimpleIndexOutOfRange { index: usize, rank: usize },
    #[error("class vector has length {got}, expected {expected}")]
    ClassLength { expected: usize, got: usize },
    #[error("position {index} out of range 1..={len}")]
    PositionOutOfRange { index: usize, len: usize },
    #[error("fundamental weight {index} of {family}{rank} is not minuscule")]
    NotMinuscule {
        family: Family,
        rank: usize,
        index: usize,
    },
    #[error("word {word:?} is not reduced: the prefix of length {prefix_len} already fails")]
    NotReduced { word: Vec<usize>, prefix_len: usize },
    #[error(
        "word {word:?} is not a minimal coset representative: it sends the simple root \
         {letter} of the parabolic subgroup to a negative root"
    )]
    NotMinimal { word: Vec<usize>, letter: usize },
    #[error("chain window {window} exceeds the configured bound {bound}")]
    ChainWindowTooWide { window: usize, bound: usize },
    #[error("the chain oracle needs i < j, got i = {i}, j = {j}")]
    ChainOrder { i: usize, j: usize },
    #[error("divisor D_{0} is not contracted")]
    NotContracted(usize),
    #[error("gamma curve needs <alpha_{i}^v, alpha_{x}> = 1, found {value}")]
    GammaPairing { x: usize, i: usize, value: i64 },
    #[error(
        "degree functional has coefficient {coefficient} on free coordinate {index}; \
         the enumeration would be unbounded"
    )]
    UnboundedEnumeration { index: usize, coefficient: i64 },
    #[error("partition {parts:?} does not fit in a {rows}x{cols} box")]
    PartitionOverflow {
        parts: Vec<usize>,
        rows: usize,
        cols: usize,
    },
    #[error("partition {0:?} is not weakly decreasing")]
    PartitionNotDecreasing(Vec<usize>),
    #[error("audit scope needs an estimated {estimated} checks, over the budget of {budget}")]
    BudgetExceeded { estimated: u64, budget: u64 },
    #[error("unknown audit suite {0:?}")]
    UnknownSuite(String),
    #[error("invalid audit scope: {0}")]
    InvalidScope(String),
    #[error("internal invariant violated: {0}")]
    InvariantViolation(String),
}

impl Error {
    pub(crate) fn invariant(msg: impl Into<String>) -> Self {
        Error::InvariantViolation(msg.into())
    }

    /// True for errors that signal a bug rather than bad input.
    pub fn is_internal(&self) -> bool {
        matches!(self, Error::InvariantViolation(_))
    }
}
