use bialgebra::SpecError;
use supercore::SuperError;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum MonoError {
    #[error("coincident coordinates {0} and {1}")]
    Coincident(usize, usize),
    #[error("argument {0} is within 1e-8 of a pole")]
    Pole(String),
    #[error("path discontinuity: {0}")]
    Discontinuous(String),
    #[error("clearance {found:.3e} below {required:.3e} in segment {segment}")]
    Clearance { segment: usize, found: f64, required: f64 },
    #[error("endpoint does not match the start point under the end permutation (off by {0:.3e})")]
    Endpoint(f64),
    #[error("invalid generator {0}")]
    InvalidGenerator(String),
    #[error("cannot parse braid word: {0}")]
    Parse(String),
    #[error("step size underflow at t = {0}")]
    StepUnderflow(f64),
    #[error("step-halving moved the result by {moved:.3e} (limit {limit:.3e})")]
    ToleranceNotMet { moved: f64, limit: f64 },
    #[error("s is not compatible with r (residual {0:.3e})")]
    Incompatible(f64),
    #[error("generator evaluation failed: {0}")]
    Generator(String),
    #[error(transparent)]
    Spec(#[from] SpecError),
    #[error(transparent)]
    Linear(#[from] SuperError),
}

pub type Result<T> = std::result::Result<T, MonoError>;
