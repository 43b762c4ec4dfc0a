use thiserror::Error;

use crate::Label;

/// Errors raised when a value violates the invariants of the type it is
/// being turned into, or an operation is called outside its domain.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("label {0} appears more than once")]
    DuplicateLabel(Label),

    #[error("label {0} is not part of the label set")]
    UnknownLabel(Label),

    #[error("label {0} is missing from the cycle list")]
    MissingLabel(Label),

    #[error("word has length {word} but the label set has {labels} labels")]
    LengthMismatch { word: usize, labels: usize },

    #[error("empty cycle")]
    EmptyCycle,

    #[error("cycles are not in standard form: {0}")]
    NonCanonicalCycles(String),

    #[error("peak detection needs positive labels; 0 uses the boundary sentinel")]
    ZeroLabel,

    #[error("malformed peak set: {0}")]
    MalformedPeakSet(String),

    #[error("word {0} is not alternating")]
    NotAlternating(String),

    #[error("word {0} is not up-down")]
    NotUpDown(String),

    #[error("cycle permutation {0} is not cycle up-down")]
    NotCycleUpDown(String),

    #[error("cycle permutation {0} has an odd cycle")]
    OddCycle(String),

    #[error("expected label set {expected}, found {found}")]
    WrongLabelSet { expected: String, found: String },

    #[error("invalid matching: {0}")]
    InvalidMatching(String),

    #[error("invalid matching pair: {0}")]
    InvalidPair(String),

    #[error("above and below arcs form {0} closed circles; exactly one is required")]
    ClosedCircle(usize),

    #[error("n = {n} exceeds the configured cap of {cap}")]
    CapExceeded { n: usize, cap: usize },

    #[error("integer overflow while computing {0}")]
    Overflow(&'static str),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
