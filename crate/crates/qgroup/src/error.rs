use bialgebra::SpecError;
use monodromy::MonoError;
use supercore::SuperError;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum QError {
    #[error("no Hopf presentation for algebra {0}")]
    UnknownAlgebra(String),
    #[error("expression has {found} legs, expected {expected}")]
    LegCount { expected: usize, found: usize },
    #[error("leg {leg} out of range for {legs} legs")]
    LegOutOfRange { leg: usize, legs: usize },
    #[error("generator {0} has no antipode entry")]
    MissingAntipode(String),
    #[error("generator {0} has no coproduct entry")]
    MissingCoproduct(String),
    #[error("coproduct of a quadratic Cartan exponential is not a finite sum")]
    QuadraticCoproduct,
    #[error("generator {gen} is not nilpotent of order {power} in the representation (|ρ^{power}| = {norm:.3e})")]
    Nilpotency { gen: String, power: usize, norm: f64 },
    #[error("hexagon routes disagree by {0:.3e}")]
    RouteMismatch(f64),
    #[error("s is not compatible with r (residual {0:.3e})")]
    Incompatible(f64),
    #[error(transparent)]
    Linear(#[from] SuperError),
    #[error(transparent)]
    Spec(#[from] SpecError),
}

impl From<QError> for MonoError {
    fn from(e: QError) -> Self {
        MonoError::Generator(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, QError>;
