use std::time::Duration;

/// Errors produced by group construction, parsing and the combinatorial
/// algorithms.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("unsupported Cartan type: {0}")]
    UnsupportedType(String),

    #[error("group too large: order {order} exceeds cap {cap}")]
    GroupTooLarge { order: u64, cap: u64 },

    #[error("invalid Coxeter matrix: {0}")]
    InvalidCoxeterMatrix(String),

    #[error("generator label {label} out of range 1..={rank}")]
    LabelOutOfRange { label: usize, rank: usize },

    #[error("not a diagram automorphism: {0}")]
    InvalidAutomorphism(String),

    #[error("Ad(w)δ({label}) is not a simple reflection (w = {word:?})")]
    NotSimple { label: usize, word: String },

    #[error("not a combinatorial piece: {0}")]
    InvalidPiece(String),

    #[error("element {x} does not act on the piece: Ad(x)^-1(K) is not a set of simple reflections")]
    DoesNotAct { x: String },

    #[error("parse error in {what}: {msg}")]
    Parse { what: &'static str, msg: String },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("oracle timed out after {0:?}")]
    Timeout(Duration),

    #[error("internal consistency failure: {0}")]
    Internal(String),
}
