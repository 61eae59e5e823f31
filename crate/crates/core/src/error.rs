use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("not a permutation of 1..{n}: {reason}")]
    InvalidPermutation { n: usize, reason: String },

    #[error("size {n} outside supported range {min}..={max}")]
    SizeOutOfRange { n: usize, min: usize, max: usize },

    #[error("size mismatch: {left} vs {right}")]
    SizeMismatch { left: usize, right: usize },

    #[error("segment [{i},{j}] invalid for size {n}")]
    InvalidSegment { i: usize, j: usize, n: usize },

    #[error("invalid tableau: {0}")]
    InvalidTableau(String),

    #[error("invalid shape: {0}")]
    InvalidShape(String),

    #[error("cell ({row},{col}) is not a {expected}")]
    InvalidCell {
        row: usize,
        col: usize,
        expected: &'static str,
    },

    #[error("dual Knuth move on {{{i},{},{}}} needs exactly one of {i},{} in the descent set", i + 1, i + 2, i + 1)]
    DualKnuthDomain { i: usize },

    #[error("tableau {tableau} does not have inner tableau {inner}")]
    NotInnerTableau { tableau: String, inner: String },

    #[error("tableau {0} is not a node of this poset")]
    UnknownNode(String),

    #[error("parse error at position {position}: {message}")]
    Parse { position: usize, message: String },

    #[error("shuffle words for class product do not split into whole Knuth classes at {0}")]
    NotClassDecomposable(String),
}
