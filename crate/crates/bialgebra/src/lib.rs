//! Finite-dimensional Lie superbialgebras given by structure constants, an
//! invariant form and a Manin-triple polarization, together with the classical
//! r-matrix, `ρ_r`, the Casimir tensor and axiom checks.

pub mod builtin;
pub mod error;
pub mod io;
pub mod rmatrix;
pub mod spec;
pub mod validate;

pub use builtin::{abelian_pair, builtin_algebra, BUILTIN_NAMES};
pub use error::{Result, SpecError};
pub use io::{algebra_to_json, load_algebra, load_algebra_str, parse_algebra, save_algebra, LOAD_TOLERANCE};
pub use rmatrix::{
    casimir_in_rep, casimir_terms, check_s_compatible, classical_r, cybe_residual, diagonal_action, evaluate_terms,
    flip_abstract, flip_conjugate, r_abstract, rho_r_in_rep, BasisTensor, ClassicalR,
};
pub use spec::{AlgebraSpec, BasisElement, Representation};
pub use validate::{validate_spec, AxiomCheck, ValidationReport};
