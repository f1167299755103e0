//! Trigonometric KZ connections on `V^{⊗n}` and their monodromy along the
//! standard generator loops of the affine braid group.

mod braid;
mod config;
mod connection;
mod error;
mod evaluator;
mod loops;
mod numeric;
mod path;
mod transport;

pub use braid::{BraidWord, Generator};
pub use config::{lattice_distance, Chart, ConfigPoint};
pub use connection::{trig_r_eval, Connection, Kind, KzSystem, POLE_GUARD};
pub use error::{MonoError, Result};
pub use evaluator::{GeneratorSource, Provenance, WordEvaluator};
pub use loops::{end_permutation, exchange_loop_alt, generator_loop};
pub use numeric::{exchange_orientation_residual, monodromy_rep, NumericSource, COMPATIBILITY_TOL};
pub use path::{LoopPath, Segment, Trajectory, CLEARANCE_SAMPLES, DEFAULT_CLEARANCE};
pub use transport::{transport, transport_open, TransportParams};
