use num_complex::Complex64;

use crate::error::{Result, SuperError};
use crate::matrix::{convolve, CMat, GradedMatrix};
use crate::scalar::Mode;

const TAYLOR_ORDER: usize = 16;
const SCALED_NORM: f64 = 0.25;

fn norm1(m: &CMat) -> f64 {
    (0..m.ncols()).map(|j| m.column(j).iter().map(|z| z.norm()).sum::<f64>()).fold(0.0, f64::max)
}

/// Truncated Taylor polynomial `sum_{k <= order} M^k / k!`.
pub fn taylor_kernel(m: &CMat, order: usize) -> CMat {
    let n = m.nrows();
    let mut term = CMat::identity(n, n);
    let mut sum = term.clone();
    for k in 1..=order {
        term = &term * m / Complex64::new(k as f64, 0.0);
        sum += &term;
    }
    sum
}

/// Scaling and squaring with a Taylor kernel.
pub fn expm_complex(m: &CMat) -> CMat {
    let norm = norm1(m);
    let s = if norm > SCALED_NORM { (norm / SCALED_NORM).log2().ceil() as i32 } else { 0 };
    let scaled = m / Complex64::new(2f64.powi(s), 0.0);
    let mut e = taylor_kernel(&scaled, TAYLOR_ORDER);
    for _ in 0..s {
        e = &e * &e;
    }
    e
}

/// Matrix exponential. In series mode the degree-0 part must be nilpotent (or
/// zero) so that the Taylor series terminates modulo `h^{N+1}`.
pub fn matrix_exp(x: &GradedMatrix) -> Result<GradedMatrix> {
    if !x.is_square() {
        return Err(SuperError::NonSquare { rows: x.rows(), cols: x.cols() });
    }
    match x.mode() {
        Mode::Complex => GradedMatrix::from_complex(x.dom().clone(), x.cod().clone(), expm_complex(x.coeff(0))),
        Mode::Series(n) => {
            let d = x.rows();
            let len = n + 1;
            let limit = len * (d + 1) + 1;
            let mut term: Vec<CMat> = GradedMatrix::identity(x.dom(), x.mode()).coeffs().to_vec();
            let mut sum = term.clone();
            for k in 1..=limit {
                term = convolve(&term, x.coeffs(), len, |a, b| a * b / Complex64::new(k as f64, 0.0))
                    .into_iter()
                    .map(|m| if m.nrows() == d { m } else { CMat::zeros(d, d) })
                    .collect();
                if term.iter().all(|m| m.iter().all(|z| z.norm() == 0.0)) {
                    return GradedMatrix::new(x.dom().clone(), x.cod().clone(), x.mode(), sum);
                }
                for (s, t) in sum.iter_mut().zip(&term) {
                    *s += t;
                }
            }
            Err(SuperError::NonTerminatingExp)
        }
    }
}
