//! Dual-mode field elements: a complex double or a power series in `h`
//! truncated after degree `N`.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_complex::Complex64;

use crate::error::{Result, SuperError};

/// Default truncation order for series arithmetic.
pub const DEFAULT_ORDER: usize = 4;

/// Arithmetic mode shared by scalars and matrices.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Mode {
    Complex,
    /// Truncated series with coefficients of `h^0..=h^N`.
    Series(usize),
}

impl Mode {
    /// Number of stored coefficients.
    pub fn coeff_count(self) -> usize {
        match self {
            Mode::Complex => 1,
            Mode::Series(n) => n + 1,
        }
    }

    /// Common mode of two operands. A complex value acts as a constant series.
    pub fn combine(self, other: Mode) -> Result<Mode> {
        match (self, other) {
            (Mode::Complex, m) | (m, Mode::Complex) => Ok(m),
            (Mode::Series(a), Mode::Series(b)) if a == b => Ok(self),
            (Mode::Series(a), Mode::Series(b)) => Err(SuperError::OrderMismatch(a, b)),
        }
    }
}

/// Power series `c_0 + c_1 h + ... + c_N h^N` modulo `h^{N+1}`.
#[derive(Clone, Debug, PartialEq)]
pub struct Series {
    coeffs: Vec<Complex64>,
}

impl Series {
    /// Builds a series from its coefficients; the order is `coeffs.len() - 1`.
    pub fn new(coeffs: Vec<Complex64>) -> Result<Self> {
        if coeffs.len() < 2 {
            return Err(SuperError::ZeroOrder);
        }
        Ok(Series { coeffs })
    }

    pub fn constant(c: Complex64, order: usize) -> Result<Self> {
        let mut coeffs = vec![Complex64::new(0.0, 0.0); order + 1];
        coeffs[0] = c;
        Series::new(coeffs)
    }

    /// The formal parameter `h` itself.
    pub fn h(order: usize) -> Result<Self> {
        let mut s = Series::constant(Complex64::new(0.0, 0.0), order)?;
        s.coeffs[1] = Complex64::new(1.0, 0.0);
        Ok(s)
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Complex64] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> Complex64 {
        self.coeffs.get(k).copied().unwrap_or_default()
    }

    fn check(&self, other: &Series) -> Result<()> {
        if self.order() != other.order() {
            return Err(SuperError::OrderMismatch(self.order(), other.order()));
        }
        Ok(())
    }

    pub fn add(&self, other: &Series) -> Result<Series> {
        self.check(other)?;
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect();
        Ok(Series { coeffs })
    }

    pub fn mul(&self, other: &Series) -> Result<Series> {
        self.check(other)?;
        let n = self.coeffs.len();
        let mut coeffs = vec![Complex64::new(0.0, 0.0); n];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs[..n - i].iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        Ok(Series { coeffs })
    }

    pub fn scale(&self, c: Complex64) -> Series {
        Series { coeffs: self.coeffs.iter().map(|a| a * c).collect() }
    }

    pub fn invert(&self) -> Result<Series> {
        let a0 = self.coeffs[0];
        if a0 == Complex64::new(0.0, 0.0) {
            return Err(SuperError::NotInvertible);
        }
        let b0 = a0.inv();
        let n = self.coeffs.len();
        let mut b = vec![b0; 1];
        for k in 1..n {
            let s: Complex64 = (1..=k).map(|j| self.coeffs[j] * b[k - j]).sum();
            b.push(-b0 * s);
        }
        Ok(Series { coeffs: b })
    }

    /// Exponential of a series with zero constant term, exact to order `N`.
    pub fn exp_h(&self) -> Result<Series> {
        if self.coeffs[0] != Complex64::new(0.0, 0.0) {
            return Err(SuperError::NonZeroConstant);
        }
        let n = self.coeffs.len();
        let mut g = vec![Complex64::new(1.0, 0.0)];
        for k in 1..n {
            let s: Complex64 = (1..=k).map(|j| self.coeffs[j] * g[k - j] * j as f64).sum();
            g.push(s / k as f64);
        }
        Ok(Series { coeffs: g })
    }

    /// Exponential allowing a constant term: `e^{c_0} exp_h(rest)`.
    pub fn exp(&self) -> Series {
        let mut rest = self.clone();
        let c0 = rest.coeffs[0];
        rest.coeffs[0] = Complex64::new(0.0, 0.0);
        rest.exp_h().expect("constant term removed").scale(c0.exp())
    }

    /// Numerical value at a concrete `h`.
    pub fn eval_at(&self, h: Complex64) -> Complex64 {
        self.coeffs.iter().rev().fold(Complex64::new(0.0, 0.0), |acc, c| acc * h + c)
    }
}

/// A complex number or a truncated series in `h`.
#[derive(Clone, Debug, PartialEq)]
pub enum Scalar {
    Complex(Complex64),
    Series(Series),
}

impl Default for Scalar {
    fn default() -> Self {
        Scalar::zero()
    }
}

impl From<f64> for Scalar {
    fn from(x: f64) -> Self {
        Scalar::Complex(Complex64::new(x, 0.0))
    }
}

impl From<Complex64> for Scalar {
    fn from(z: Complex64) -> Self {
        Scalar::Complex(z)
    }
}

impl From<Series> for Scalar {
    fn from(s: Series) -> Self {
        Scalar::Series(s)
    }
}

impl Scalar {
    pub fn zero() -> Self {
        Scalar::Complex(Complex64::new(0.0, 0.0))
    }

    pub fn one() -> Self {
        Scalar::Complex(Complex64::new(1.0, 0.0))
    }

    /// The deformation parameter in the given mode: a number for `Complex`, or
    /// the series `h` itself. `value` is only used in complex mode.
    pub fn parameter(mode: Mode, value: Complex64) -> Result<Self> {
        match mode {
            Mode::Complex => Ok(Scalar::Complex(value)),
            Mode::Series(n) => Ok(Scalar::Series(Series::h(n)?)),
        }
    }

    pub fn mode(&self) -> Mode {
        match self {
            Scalar::Complex(_) => Mode::Complex,
            Scalar::Series(s) => Mode::Series(s.order()),
        }
    }

    /// Coefficient list in the given mode (a complex value becomes a constant series).
    pub fn coeffs_in(&self, mode: Mode) -> Result<Vec<Complex64>> {
        let target = self.mode().combine(mode)?;
        let mut out = vec![Complex64::new(0.0, 0.0); target.coeff_count()];
        match self {
            Scalar::Complex(z) => out[0] = *z,
            Scalar::Series(s) => out.copy_from_slice(s.coeffs()),
        }
        Ok(out)
    }

    fn from_coeffs(mode: Mode, coeffs: Vec<Complex64>) -> Self {
        match mode {
            Mode::Complex => Scalar::Complex(coeffs[0]),
            Mode::Series(_) => Scalar::Series(Series { coeffs }),
        }
    }

    fn as_series(&self, order: usize) -> Series {
        match self {
            Scalar::Complex(z) => Series::constant(*z, order).expect("order checked by caller"),
            Scalar::Series(s) => s.clone(),
        }
    }

    fn binary(
        &self,
        other: &Scalar,
        fc: impl Fn(Complex64, Complex64) -> Complex64,
        fs: impl Fn(&Series, &Series) -> Result<Series>,
    ) -> Result<Scalar> {
        match (self, other) {
            (Scalar::Complex(a), Scalar::Complex(b)) => Ok(Scalar::Complex(fc(*a, *b))),
            _ => match self.mode().combine(other.mode())? {
                Mode::Series(n) => Ok(Scalar::Series(fs(&self.as_series(n), &other.as_series(n))?)),
                Mode::Complex => unreachable!("one operand is a series"),
            },
        }
    }

    pub fn try_add(&self, other: &Scalar) -> Result<Scalar> {
        self.binary(other, |a, b| a + b, |a, b| a.add(b))
    }

    pub fn try_sub(&self, other: &Scalar) -> Result<Scalar> {
        self.binary(other, |a, b| a - b, |a, b| a.add(&b.scale(Complex64::new(-1.0, 0.0))))
    }

    pub fn try_mul(&self, other: &Scalar) -> Result<Scalar> {
        self.binary(other, |a, b| a * b, |a, b| a.mul(b))
    }

    pub fn try_div(&self, other: &Scalar) -> Result<Scalar> {
        self.try_mul(&other.invert()?)
    }

    pub fn invert(&self) -> Result<Scalar> {
        match self {
            Scalar::Complex(z) if *z == Complex64::new(0.0, 0.0) => Err(SuperError::NotInvertible),
            Scalar::Complex(z) => Ok(Scalar::Complex(z.inv())),
            Scalar::Series(s) => Ok(Scalar::Series(s.invert()?)),
        }
    }

    /// Exponential of an element with zero constant term (series mode); plain
    /// `exp` in complex mode.
    pub fn exp_h(&self) -> Result<Scalar> {
        match self {
            Scalar::Complex(z) => Ok(Scalar::Complex(z.exp())),
            Scalar::Series(s) => Ok(Scalar::Series(s.exp_h()?)),
        }
    }

    /// Exponential with an arbitrary constant term.
    pub fn exp(&self) -> Scalar {
        match self {
            Scalar::Complex(z) => Scalar::Complex(z.exp()),
            Scalar::Series(s) => Scalar::Series(s.exp()),
        }
    }

    pub fn scale(&self, c: Complex64) -> Scalar {
        match self {
            Scalar::Complex(z) => Scalar::Complex(z * c),
            Scalar::Series(s) => Scalar::Series(s.scale(c)),
        }
    }

    pub fn powi(&self, k: u32) -> Scalar {
        (0..k).fold(Scalar::one(), |acc, _| &acc * self)
    }

    /// Constant coefficient (the value itself in complex mode).
    pub fn constant_term(&self) -> Complex64 {
        match self {
            Scalar::Complex(z) => *z,
            Scalar::Series(s) => s.coeff(0),
        }
    }

    /// Largest coefficient modulus.
    pub fn max_abs(&self) -> f64 {
        match self {
            Scalar::Complex(z) => z.norm(),
            Scalar::Series(s) => s.coeffs().iter().map(|c| c.norm()).fold(0.0, f64::max),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.max_abs() == 0.0
    }

    /// Complex value; `None` for a series.
    pub fn as_complex(&self) -> Option<Complex64> {
        match self {
            Scalar::Complex(z) => Some(*z),
            Scalar::Series(_) => None,
        }
    }

    /// Numerical value at a concrete `h`.
    pub fn eval_at(&self, h: Complex64) -> Complex64 {
        match self {
            Scalar::Complex(z) => *z,
            Scalar::Series(s) => s.eval_at(h),
        }
    }

    pub(crate) fn from_mode_coeffs(mode: Mode, coeffs: Vec<Complex64>) -> Self {
        Scalar::from_coeffs(mode, coeffs)
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Complex(z) => write!(f, "{z}"),
            Scalar::Series(s) => {
                let terms: Vec<String> =
                    s.coeffs().iter().enumerate().map(|(k, c)| format!("({c})h^{k}")).collect();
                write!(f, "{}", terms.join(" + "))
            }
        }
    }
}

macro_rules! scalar_op {
    ($trait:ident, $method:ident, $try:ident) => {
        impl $trait<&Scalar> for &Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                self.$try(rhs).expect("scalar mode mismatch")
            }
        }
        impl $trait<Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                (&self).$try(&rhs).expect("scalar mode mismatch")
            }
        }
    };
}

scalar_op!(Add, add, try_add);
scalar_op!(Sub, sub, try_sub);
scalar_op!(Mul, mul, try_mul);
scalar_op!(Div, div, try_div);

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        self.scale(Complex64::new(-1.0, 0.0))
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(x: f64) -> Complex64 {
        Complex64::new(x, 0.0)
    }

    #[test]
    fn geometric_inverse_truncates() {
        let a = Scalar::Series(Series::new(vec![c(1.0), c(1.0), c(0.0), c(0.0)]).unwrap());
        let b = Scalar::Series(Series::new(vec![c(1.0), c(-1.0), c(1.0), c(-1.0)]).unwrap());
        let p = &a * &b;
        assert_eq!(p, Scalar::Series(Series::constant(c(1.0), 3).unwrap()));
    }

    #[test]
    fn exp_h_of_h_times_exp_h_of_minus_h() {
        let h = Scalar::Series(Series::h(4).unwrap());
        let e = h.exp_h().unwrap() * (-&h).exp_h().unwrap();
        let diff = &e - &Scalar::one();
        assert!(diff.max_abs() < 1e-15);
    }

    #[test]
    fn invert_h_fails() {
        let h = Scalar::Series(Series::h(4).unwrap());
        assert_eq!(h.invert(), Err(SuperError::NotInvertible));
    }

    #[test]
    fn mismatched_orders_error() {
        let a = Scalar::Series(Series::h(3).unwrap());
        let b = Scalar::Series(Series::h(4).unwrap());
        assert_eq!(a.try_add(&b), Err(SuperError::OrderMismatch(3, 4)));
    }

    #[test]
    fn exp_h_rejects_constant() {
        let a = Scalar::Series(Series::constant(c(1.0), 2).unwrap());
        assert_eq!(a.exp_h(), Err(SuperError::NonZeroConstant));
    }

    #[test]
    fn general_exp_matches_numeric() {
        let s = Series::new(vec![c(0.3), c(1.0), c(0.0), c(0.0), c(0.0), c(0.0), c(0.0), c(0.0)])
            .unwrap();
        let e = s.exp();
        let h = Complex64::new(0.01, 0.0);
        assert!((e.eval_at(h) - (c(0.3) + h).exp()).norm() < 1e-14);
    }
}
