use thiserror::Error;

/// Errors raised by the engine.
///
/// Composition of incompatible words is not an error (it yields zero);
/// everything here indicates malformed input or an exceeded bound.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{kind} index {index} out of range at level {level}")]
    IndexOutOfRange {
        kind: &'static str,
        level: usize,
        index: i64,
    },
    #[error("χ generators need level >= 1 (got level {0})")]
    ChiAtLevelZero(usize),
    #[error("level mismatch: expected {expected}, found {found}")]
    LevelMismatch { expected: usize, found: usize },
    #[error("generators are not composable: {0}")]
    NotComposable(String),
    #[error("unexpected generator {generator} ({context})")]
    UnexpectedGenerator {
        generator: String,
        context: &'static str,
    },
    #[error("parse error at byte {position}: {message}")]
    Parse { position: usize, message: String },
    #[error("rewriting did not terminate within {0} steps")]
    NonTerminating(usize),
    #[error("integer coefficient overflow")]
    Overflow,
    #[error("bidegree ({source_level}, {target_level}) exceeds the resource bound t <= {bound}")]
    BoundExceeded {
        source_level: usize,
        target_level: usize,
        bound: usize,
    },
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),
    #[error("not an order-preserving surjection: {0}")]
    NotSurjection(String),
    #[error("not in normal form: {0}")]
    NotNormal(String),
    #[error("unsupported law table: {0}")]
    UnsupportedLaw(String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("element is not homogeneous: {0}")]
    NotHomogeneous(String),
    #[error("{0} has no canonical form; decide equality instead")]
    NoCanonicalForm(&'static str),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
