use crate::setcomp::{FiniteSet, Label};

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("ground sets {left} and {right} are not disjoint")]
    NotDisjoint { left: FiniteSet, right: FiniteSet },

    #[error("{sub} is not a subset of {ground}")]
    NotSubset { sub: FiniteSet, ground: FiniteSet },

    #[error("ground set mismatch: expected {expected}, found {found}")]
    GroundMismatch { expected: FiniteSet, found: FiniteSet },

    #[error("{what}: size {size} exceeds the configured bound {bound}")]
    BoundExceeded {
        what: &'static str,
        size: usize,
        bound: usize,
    },

    #[error("compositions are not comparable in the refinement order")]
    NotComparable,

    #[error("invalid composition: {0}")]
    InvalidComposition(String),

    #[error("label map is not a bijection: {0}")]
    NotBijection(String),

    #[error("label {0} already occurs in the ground set")]
    LabelCollision(Label),

    #[error("label {0} is not in the ground set")]
    UnknownLabel(Label),

    #[error("element is not primitive")]
    NotPrimitive,

    #[error("operation requires a nonempty ground set")]
    EmptyGround,

    #[error("point is not generic: channel {0} has zero sum")]
    NotGeneric(String),

    #[error("no generic point found after {0} attempts")]
    GenericityFailure(usize),

    #[error("orientation is not a cell: {0}")]
    NotACell(String),

    #[error("invalid tree: {0}")]
    InvalidTree(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("unknown decoration symbol {0}")]
    UnknownDecoration(String),

    #[error("decoration assignment does not cover the ground set {0}")]
    IncompleteAssignment(FiniteSet),

    #[error("truncation too low: need {needed} in {var}, have {have}")]
    InsufficientTruncation {
        var: &'static str,
        needed: u32,
        have: u32,
    },

    #[error("series is not invertible: constant term must be 1")]
    NotInvertible,

    #[error("configuration does not respect the required composition: {0}")]
    NotRespecting(String),

    #[error("malformed vertex map: {0}")]
    MalformedVertexMap(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
