use bialgebra::SpecError;
use monodromy::MonoError;
use qgroup::QError;
use supercore::SuperError;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum HarnessError {
    #[error("configuration error: {0}")]
    Config(String),
    #[error("i/o error: {0}")]
    Io(String),
    #[error("evaluators are not comparable: {0}")]
    Dimension(String),
    #[error(transparent)]
    Spec(#[from] SpecError),
    #[error(transparent)]
    Mono(#[from] MonoError),
    #[error(transparent)]
    Quantum(#[from] QError),
    #[error(transparent)]
    Linear(#[from] SuperError),
}

impl HarnessError {
    /// Process exit status: 2 for configuration and input problems, 1 otherwise.
    pub fn exit_code(&self) -> i32 {
        match self {
            HarnessError::Config(_) | HarnessError::Io(_) => 2,
            HarnessError::Spec(e) => match e {
                SpecError::Axiom(_) => 1,
                _ => 2,
            },
            _ => 1,
        }
    }
}

pub type Result<T> = std::result::Result<T, HarnessError>;
