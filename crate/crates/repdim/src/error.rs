//! Crate-wide error type.

use thiserror::Error;

#[derive(Error, Debug, Clone, PartialEq)]
pub enum Error {
    #[error("matrix is singular")]
    SingularMatrix,

    #[error("index out of range: {0}")]
    IndexOutOfRange(String),

    #[error("modules live over different algebras")]
    MixedAlgebras,

    #[error("algebra relation violated: {relation} is nonzero on the module")]
    RelationViolation { relation: String },

    #[error("diagram is not a valid shape: {0}")]
    BadDiagram(String),

    #[error("isomorphism test undecided for {a} vs {b}: invariants agree but no invertible intertwiner found")]
    UndecidedIsomorphism { a: String, b: String },

    #[error("summands {a} and {b} are isomorphic (summand set must be multiplicity-free)")]
    DuplicateSummand { a: String, b: String },

    #[error("endomorphism ring of {module} has semisimple quotient of dimension {dim} (non-split local; cannot certify)")]
    NonSplitLocal { module: String, dim: usize },

    #[error("module is decomposable")]
    Decomposable,

    #[error("resolution of {target} exceeded the depth cap {cap}")]
    CapExceeded { target: String, cap: usize },

    #[error("generator-cogenerator check failed: no summand isomorphic to the {0}")]
    MissingProjective(&'static str),

    #[error("cannot parse label `{0}`")]
    LabelParse(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("internal check failed: {0}")]
    Internal(String),
}

impl Error {
    /// CLI exit code channel: 1 = check failed, 2 = undecided, 3 = input error.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::UndecidedIsomorphism { .. }
            | Error::CapExceeded { .. }
            | Error::NonSplitLocal { .. } => 2,
            Error::IndexOutOfRange(_) | Error::LabelParse(_) | Error::InvalidInput(_) => 3,
            _ => 1,
        }
    }
}
