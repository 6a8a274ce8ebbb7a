use thiserror::Error;

/// Errors raised by the algebra, module and Morita routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("scalars from different fields ({0} vs {1})")]
    FieldMismatch(String, String),
    #[error("invalid field: {0}")]
    InvalidField(String),
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("relations do not span a homogeneous subspace")]
    NonHomogeneousRelations,
    #[error("map is not parity-homogeneous")]
    NonHomogeneousInput,
    #[error("invalid algebra {name}: {reason}")]
    InvalidAlgebra { name: String, reason: String },
    #[error("invalid module {name}: {reason}")]
    InvalidModule { name: String, reason: String },
    #[error("module signature mismatch: {0}")]
    SignatureMismatch(String),
    #[error("induced map is not well defined on the quotient: {0}")]
    IllDefined(String),
    #[error("module is not projective")]
    NotProjective,
    #[error("module is not a progenerator")]
    NotProgenerator,
    #[error("required flag not set: {0}")]
    FlagNotSet(String),
    #[error("algebra is not super Azumaya")]
    NotAzumaya,
    #[error("precondition failed: {0}")]
    PreconditionFailed(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
