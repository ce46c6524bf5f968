use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AlgebraError {
    #[error("division by zero")]
    DivisionByZero,

    #[error("rewriting exceeded {limit} steps in presentation `{presentation}`")]
    StepLimit { presentation: String, limit: usize },

    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),

    #[error("unknown identifier `{0}`")]
    UnknownIdentifier(String),

    #[error("unknown preset `{name}` (available: {available})")]
    UnknownPreset { name: String, available: String },

    #[error("unknown element `{name}` (available: {available})")]
    UnknownElement { name: String, available: String },

    #[error("unknown check `{name}` (available: {available})")]
    UnknownCheck { name: String, available: String },

    #[error("invalid presentation: {0}")]
    InvalidPresentation(String),

    #[error("presentation mismatch: `{left}` vs `{right}`")]
    PresentationMismatch { left: String, right: String },

    #[error("tensor slot mismatch: {0}")]
    SlotMismatch(String),

    #[error("morphism `{morphism}` has no image for `{generator}`")]
    MissingImage { morphism: String, generator: String },

    #[error("parse error at {pos}: {message}")]
    Parse { pos: usize, message: String },

    #[error("{0}")]
    Unsupported(String),
}

pub type Result<T, E = AlgebraError> = std::result::Result<T, E>;
