use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("decode error: {0}")]
    Decode(String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("zero vector has no generated submodule")]
    ZeroVector,
    #[error("weight {0} is out of range")]
    NotInRange(i64),
    #[error("not the Weyl character of a tilting module (weight {weight} went negative)")]
    NotTiltingCharacter { weight: i64 },
    #[error("incompatible shapes: {0}")]
    IncompatibleShapes(String),
    #[error("relation {relation} fails at {witness}")]
    RelationFailure { relation: String, witness: String },
    #[error("boundary mismatch: {0}")]
    BoundaryMismatch(String),
    #[error("evaluation needs a marked diagram")]
    UnmarkedDiagram,
    #[error("the mark may only sit in the rightmost face")]
    MarkPlacement,
    #[error("parse error at line {line}, column {col}: {msg}")]
    Parse { line: usize, col: usize, msg: String },
    #[error("arity error in slice {slice} (line {line}): {msg}")]
    Arity { slice: usize, line: usize, msg: String },
    #[error("morphism is not natural: {0}")]
    NotNatural(String),
    #[error("internal error: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
