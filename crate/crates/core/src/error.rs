use thiserror::Error;

use crate::frames::Rejection;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("gcd undefined for the zero vector")]
    GcdUndefined,

    #[error("zero vector has no Sylvester system")]
    ZeroVector,

    #[error("no Bezout vector exists: gcd of the components is not 1")]
    NoBezoutVector,

    #[error("not completable: gcd of the components is not 1")]
    NotCompletable,

    #[error("components have a nontrivial common factor")]
    NotCoprime,

    #[error("components linearly dependent: coefficient matrix has rank {rank} < {n}")]
    LinearlyDependent { rank: usize, n: usize },

    #[error("parameter section undefined: degree {degree} < length {n}")]
    ParameterSectionUndefined { degree: i64, n: usize },

    #[error("first component is zero")]
    ZeroFirstComponent,

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },

    #[error("determinant is {det}, expected exactly 1")]
    NotSpecialLinear { det: String },

    #[error("matrix is singular")]
    Singular,

    #[error("determinant {det} is not a nonzero constant")]
    NotUnimodular { det: String },

    #[error("degree {degree} exceeds bound {bound}")]
    DegreeExceeds { degree: usize, bound: usize },

    #[error("length {len} is not {n} * ({d} + 1)")]
    LengthMismatch { len: usize, n: usize, d: usize },

    #[error("expected {expected} vectors, found {found}")]
    WrongCount { expected: usize, found: usize },

    #[error("vector length must be at least 2, found {0}")]
    TooShort(usize),

    #[error("curve is not generic: {0}")]
    NotGeneric(Rejection),
}
