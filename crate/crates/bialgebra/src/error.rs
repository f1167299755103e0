use supercore::SuperError;
use thiserror::Error;

use crate::validate::ValidationReport;

#[derive(Debug, Error)]
pub enum SpecError {
    #[error("io error: {0}")]
    Io(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("schema violation: {0}")]
    Schema(String),
    #[error("axiom violation: {}", .0.summary())]
    Axiom(Box<ValidationReport>),
    #[error("unknown algebra {0:?}")]
    UnknownAlgebra(String),
    #[error("unknown representation {0:?}")]
    UnknownRep(String),
    #[error("invalid polarization: {0}")]
    Polarization(String),
    #[error("operator s must be even")]
    OddOperator,
    #[error(transparent)]
    Linear(#[from] SuperError),
}

impl SpecError {
    /// Stable numeric code per error family.
    pub fn code(&self) -> u32 {
        match self {
            SpecError::Io(_) => 10,
            SpecError::Parse(_) => 11,
            SpecError::Schema(_) => 12,
            SpecError::Axiom(_) => 13,
            SpecError::UnknownAlgebra(_) => 14,
            SpecError::UnknownRep(_) => 15,
            SpecError::Polarization(_) => 16,
            SpecError::OddOperator => 17,
            SpecError::Linear(_) => 18,
        }
    }
}

pub type Result<T> = std::result::Result<T, SpecError>;
