use thiserror::Error;

/// Errors produced by the library.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("branch tuple must have at least 2 entries, got {0}")]
    TooFewBranches(usize),
    #[error("branch index at position {position} is {value}, must be at least 2")]
    BranchTooSmall { position: usize, value: usize },
    #[error("size {size} exceeds the configured limit {limit}")]
    SizeLimit { size: u128, limit: u128 },
    #[error("word has {found} digits, basis has {expected} positions")]
    WordLength { expected: usize, found: usize },
    #[error("digit {digit} at position {position} is outside 0..{radix}")]
    DigitOutOfRange {
        position: usize,
        digit: usize,
        radix: usize,
    },
    #[error("value {value} is outside 0..{bound}")]
    OutOfRange { value: usize, bound: usize },
    #[error("image table is not a bijection of 0..{0}")]
    NotBijective(usize),
    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },
    #[error("point {0} appears in more than one cycle")]
    OverlappingCycles(usize),
    #[error("malformed cycle string {input:?}: {reason}")]
    CycleSyntax { input: String, reason: String },
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("elementary index ({row}, {col}) outside a {rows}x{cols} matrix (1-based)")]
    ElementaryIndex {
        row: usize,
        col: usize,
        rows: usize,
        cols: usize,
    },
    #[error("factor {index} is {rows}x{cols}, expected a square matrix")]
    NotSquare {
        index: usize,
        rows: usize,
        cols: usize,
    },
    #[error("shift k={k} must lie in 1..={max}")]
    ShiftRange { k: usize, max: usize },
    #[error("gcd({k}, {modulus}) != 1, Sh_k is not a permutation")]
    NotCoprime { k: usize, modulus: usize },
    #[error("group order exceeds the limit of {0} elements")]
    GroupLimit(usize),
    #[error("modulus mismatch: {left} vs {right}")]
    ModulusMismatch { left: usize, right: usize },
    #[error("cell ({row}, {col}) would need a sum of {terms} distinct powers")]
    NotMonomial {
        row: usize,
        col: usize,
        terms: usize,
    },
    #[error("bad factorization of {n}: {reason}")]
    Factorization { n: usize, reason: String },
    #[error("vector has length {found}, expected {expected}")]
    LengthMismatch { expected: usize, found: usize },
    #[error("format error: {0}")]
    Format(String),
}

pub type Result<T> = std::result::Result<T, Error>;
