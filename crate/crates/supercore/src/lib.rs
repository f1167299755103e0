//! Z2-graded linear algebra over a dual-mode scalar field.
//!
//! Scalars are complex doubles or power series in a formal parameter `h`
//! truncated after a fixed order. Operators between graded spaces carry
//! Koszul signs in tensor products, flips and slot placements.

pub mod error;
pub mod expm;
pub mod matrix;
pub mod scalar;
pub mod space;
pub mod tensor;

pub use error::{Result, SuperError};
pub use expm::{expm_complex, matrix_exp, taylor_kernel};
pub use matrix::{CMat, GradedMatrix};
pub use num_complex::Complex64;
pub use scalar::{Mode, Scalar, Series, DEFAULT_ORDER};
pub use space::SuperSpace;
pub use tensor::{
    contract_leading_pair, decompose_pair, embed, flip_terms, koszul_flip, permutation_operator, place_pair,
    place_single, tensor_product_op, tensor_sum, PureTensor,
};

/// Shorthand for a complex number.
pub fn c64(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}
