use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Why a piece of diagram text could not be read.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseErrorKind {
    #[error("malformed token {0:?}")]
    MalformedToken(String),
    #[error("crossing {crossing} missing {missing} pass")]
    MissingPass {
        crossing: u32,
        missing: &'static str,
    },
    #[error("crossing {crossing} has two {pass} passes")]
    DuplicatePass { crossing: u32, pass: &'static str },
    #[error("crossing {crossing} appears {count} times")]
    TooManyPasses { crossing: u32, count: usize },
    #[error("crossing id must be positive")]
    ZeroCrossing,
    #[error("DT entry {0} is zero")]
    DtZero(i64),
    #[error("DT entry {0} is odd")]
    DtOdd(i64),
    #[error("DT entry {value} repeats label {label}")]
    DtRepeated { value: i64, label: i64 },
    #[error("DT entry {value} exceeds 2c = {max}")]
    DtOutOfRange { value: i64, max: i64 },
    #[error("braid letter {letter} is outside 1..={max}")]
    BraidLetter { letter: i64, max: usize },
}

/// A parse failure located at a 1-based character column of the input.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("column {column}: {kind}")]
pub struct ParseError {
    pub column: usize,
    pub kind: ParseErrorKind,
}

#[derive(Debug, Error)]
pub enum Error {
    #[error(transparent)]
    Parse(#[from] ParseError),

    #[error("diagram has no crossings; this operation needs at least one")]
    Degenerate,

    #[error("base point gap {gap} out of range for {gaps} gaps")]
    GapOutOfRange { gap: usize, gaps: usize },

    #[error("unknown crossing {0}")]
    UnknownCrossing(u32),

    #[error("invalid diagram: {0}")]
    InvalidDiagram(String),

    #[error("crossing {0} is visited twice at positions of equal parity; no DT code exists")]
    DtParity(u32),

    #[error("braid closure has {} components (cycle lengths {cycles:?})", cycles.len())]
    MultiComponent { cycles: Vec<usize> },

    #[error("braid needs at least 2 strands, got {0}")]
    TooFewStrands(usize),

    #[error("invalid torus parameters ({p}, {q}): {reason}")]
    InvalidTorus {
        p: u32,
        q: u32,
        reason: &'static str,
    },

    #[error("refusing to enumerate {n}-crossing words: cap is {cap}")]
    EnumerationCap { n: usize, cap: usize },

    #[error("diagram is not alternating")]
    NotAlternating,

    #[error("{0}")]
    InvalidInput(String),

    #[error("internal inconsistency: {0}")]
    Inconsistency(String),

    #[error("knot data line {line}: {message}")]
    Data { line: usize, message: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}
