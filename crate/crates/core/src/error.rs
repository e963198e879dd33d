use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("p not an odd prime: {0}")]
    NotOddPrime(u32),
    #[error("extension degree must be at least 1")]
    ZeroExtensionDegree,
    #[error("field of size {0} is too large")]
    FieldTooLarge(u64),
    #[error("modulus must be monic of degree {expected}, got {got:?}")]
    BadModulus { expected: u32, got: Vec<u32> },
    #[error("modulus is reducible over F_{p}: divisible by {factor:?}")]
    ReducibleModulus { p: u32, factor: Vec<u32> },
    #[error("element encoding {value} out of range for field of size {q}")]
    ElementOutOfRange { value: u64, q: u32 },
    #[error("division by zero")]
    DivisionByZero,
    #[error("duplicate evaluation point {0}")]
    DuplicatePoint(u32),
    #[error("length mismatch: expected {expected}, got {got}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("repeated root {0}")]
    RepeatedRoot(u32),
    #[error("invalid dimension: {0}")]
    InvalidDimension(String),
    #[error("wrong field: {0}")]
    WrongField(String),
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("generator matrix is rank deficient (rank {rank} < {rows} rows)")]
    RankDeficient { rank: usize, rows: usize },
    #[error("word already lies in the code")]
    WordInCode,
    #[error("code is not MDS; use the brute-force distance instead")]
    NotMds,
    #[error("enumeration of {needed} items exceeds budget {budget}; {advice}")]
    BudgetExceeded {
        needed: u128,
        budget: u128,
        advice: &'static str,
    },
    #[error("code {0} has no RS/PRS structure; use the syndrome or brute algorithm")]
    Unstructured(String),
    #[error("inner code is not contained in outer code")]
    NotContained,
    #[error("k-subset-sum has no solution: {0}")]
    SspUnsolvable(String),
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

pub type Result<T> = std::result::Result<T, Error>;
