use thiserror::Error;

use crate::series::Alphabet;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("alphabet mismatch: {left} vs {right}")]
    AlphabetMismatch { left: Alphabet, right: Alphabet },

    #[error("truncation cap mismatch: {left} vs {right}")]
    CapMismatch { left: usize, right: usize },

    #[error("cap {needed} exceeds available precision {available}")]
    InsufficientCap { needed: usize, available: usize },

    #[error("series has a nonzero constant term")]
    NonzeroConstant,

    #[error("series constant term must be 1")]
    ConstantNotOne,

    #[error("series constant term is zero, not invertible")]
    NotInvertible,

    #[error("operation needs a chord or oriented alphabet, got {0}")]
    AbstractAlphabet(Alphabet),

    #[error("permutation size mismatch: {left} vs {right}")]
    SizeMismatch { left: usize, right: usize },

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("{0} substitution images expected, got {1}")]
    SubstitutionArity(usize, usize),

    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("invalid word: {0}")]
    InvalidWord(String),

    #[error("semidirect context mismatch: {0}")]
    ContextMismatch(String),

    #[error("element is not a single invertible term")]
    NotSingleTerm,

    #[error("element is not group-like: {0}")]
    NotGroupLike(String),

    #[error("normalization fails: {0}")]
    Normalization(String),

    #[error("hypothesis {axiom} fails at degree {degree}")]
    HypothesisFailed { axiom: String, degree: usize },

    #[error("no solution: the degree-{0} equations are inconsistent")]
    Inconsistent(usize),

    #[error("basis cache error: {0}")]
    Cache(String),

    #[error("index out of range: {0}")]
    IndexOutOfRange(String),
}

impl Error {
    pub(crate) fn parse(pos: usize, msg: impl Into<String>) -> Self {
        Error::Parse { pos, msg: msg.into() }
    }
}
