use std::ops::{Add, Mul, Neg, Sub};

use nalgebra::DMatrix;
use num_complex::Complex64;

use crate::error::{Result, SuperError};
use crate::scalar::{Mode, Scalar};
use crate::space::SuperSpace;

/// Dense complex matrix.
pub type CMat = DMatrix<Complex64>;

/// Linear map between graded spaces. Entry `(i, j)` is the coefficient of
/// codomain vector `i` in the image of domain vector `j`.
///
/// In series mode the entries are stored as `N + 1` coefficient matrices, one
/// per power of `h`.
#[derive(Clone, Debug, PartialEq)]
pub struct GradedMatrix {
    dom: SuperSpace,
    cod: SuperSpace,
    mode: Mode,
    coeffs: Vec<CMat>,
}

pub(crate) fn zero() -> Complex64 {
    Complex64::new(0.0, 0.0)
}

fn is_zero_mat(m: &CMat) -> bool {
    m.iter().all(|z| *z == zero())
}

/// `out[k] = sum_{i+j=k} f(a[i], b[j])`, truncated to `len` terms.
pub(crate) fn convolve(
    a: &[CMat],
    b: &[CMat],
    len: usize,
    f: impl Fn(&CMat, &CMat) -> CMat,
) -> Vec<CMat> {
    let mut out: Vec<Option<CMat>> = vec![None; len];
    for (i, ai) in a.iter().enumerate().take(len) {
        if is_zero_mat(ai) {
            continue;
        }
        for (j, bj) in b.iter().enumerate().take(len - i) {
            if is_zero_mat(bj) {
                continue;
            }
            let p = f(ai, bj);
            match &mut out[i + j] {
                Some(acc) => *acc += p,
                slot => *slot = Some(p),
            }
        }
    }
    out.into_iter().map(|m| m.unwrap_or_else(|| CMat::zeros(0, 0))).collect()
}

impl GradedMatrix {
    pub fn new(dom: SuperSpace, cod: SuperSpace, mode: Mode, coeffs: Vec<CMat>) -> Result<Self> {
        if coeffs.len() != mode.coeff_count() {
            return Err(SuperError::Dimension(format!(
                "{} coefficient matrices for mode {mode:?}",
                coeffs.len()
            )));
        }
        for c in &coeffs {
            if c.nrows() != cod.dim() || c.ncols() != dom.dim() {
                return Err(SuperError::Dimension(format!(
                    "entry array {}x{} for map of {} -> {}",
                    c.nrows(),
                    c.ncols(),
                    dom.dim(),
                    cod.dim()
                )));
            }
        }
        Ok(GradedMatrix { dom, cod, mode, coeffs })
    }

    /// Zero-size placeholders produced by `convolve` are replaced by zeros.
    fn from_parts(dom: SuperSpace, cod: SuperSpace, mode: Mode, coeffs: Vec<CMat>) -> Self {
        let (r, c) = (cod.dim(), dom.dim());
        let coeffs = coeffs
            .into_iter()
            .map(|m| if m.nrows() == r && m.ncols() == c { m } else { CMat::zeros(r, c) })
            .collect();
        GradedMatrix { dom, cod, mode, coeffs }
    }

    pub fn from_complex(dom: SuperSpace, cod: SuperSpace, m: CMat) -> Result<Self> {
        GradedMatrix::new(dom, cod, Mode::Complex, vec![m])
    }

    /// Endomorphism of `space` with complex entries.
    pub fn endo(space: &SuperSpace, m: CMat) -> Result<Self> {
        GradedMatrix::from_complex(space.clone(), space.clone(), m)
    }

    pub fn zeros(dom: &SuperSpace, cod: &SuperSpace, mode: Mode) -> Self {
        let coeffs = vec![CMat::zeros(cod.dim(), dom.dim()); mode.coeff_count()];
        GradedMatrix { dom: dom.clone(), cod: cod.clone(), mode, coeffs }
    }

    pub fn identity(space: &SuperSpace, mode: Mode) -> Self {
        let mut m = GradedMatrix::zeros(space, space, mode);
        m.coeffs[0] = CMat::identity(space.dim(), space.dim());
        m
    }

    pub fn dom(&self) -> &SuperSpace {
        &self.dom
    }

    pub fn cod(&self) -> &SuperSpace {
        &self.cod
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }

    pub fn rows(&self) -> usize {
        self.cod.dim()
    }

    pub fn cols(&self) -> usize {
        self.dom.dim()
    }

    /// Coefficient matrices of `h^0..=h^N` (a single matrix in complex mode).
    pub fn coeffs(&self) -> &[CMat] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> &CMat {
        &self.coeffs[k]
    }

    /// The entry array in complex mode.
    pub fn complex(&self) -> Option<&CMat> {
        match self.mode {
            Mode::Complex => Some(&self.coeffs[0]),
            Mode::Series(_) => None,
        }
    }

    /// Reinterprets a complex matrix as a constant series; identity otherwise.
    pub fn promote(&self, mode: Mode) -> Result<Self> {
        let target = self.mode.combine(mode)?;
        if target == self.mode {
            return Ok(self.clone());
        }
        let mut coeffs = self.coeffs.clone();
        coeffs.resize(target.coeff_count(), CMat::zeros(self.rows(), self.cols()));
        Ok(GradedMatrix { dom: self.dom.clone(), cod: self.cod.clone(), mode: target, coeffs })
    }

    pub fn entry(&self, i: usize, j: usize) -> Scalar {
        Scalar::from_mode_coeffs(self.mode, self.coeffs.iter().map(|m| m[(i, j)]).collect())
    }

    /// Applies the same linear map to every coefficient matrix.
    pub fn map_coeffs(&self, dom: SuperSpace, cod: SuperSpace, f: impl Fn(&CMat) -> CMat) -> Result<Self> {
        GradedMatrix::new(dom, cod, self.mode, self.coeffs.iter().map(f).collect())
    }

    fn same_shape(&self, other: &GradedMatrix) -> Result<()> {
        if !self.dom.compatible(&other.dom) || !self.cod.compatible(&other.cod) {
            return Err(SuperError::Dimension("operands act between different graded spaces".into()));
        }
        Ok(())
    }

    fn zip(&self, other: &GradedMatrix, f: impl Fn(&CMat, &CMat) -> CMat) -> Result<Self> {
        self.same_shape(other)?;
        let mode = self.mode.combine(other.mode)?;
        let a = self.promote(mode)?;
        let b = other.promote(mode)?;
        let coeffs = a.coeffs.iter().zip(&b.coeffs).map(|(x, y)| f(x, y)).collect();
        Ok(GradedMatrix { dom: self.dom.clone(), cod: self.cod.clone(), mode, coeffs })
    }

    pub fn try_add(&self, other: &GradedMatrix) -> Result<Self> {
        self.zip(other, |a, b| a + b)
    }

    pub fn try_sub(&self, other: &GradedMatrix) -> Result<Self> {
        self.zip(other, |a, b| a - b)
    }

    /// Composition `self ∘ other`.
    pub fn try_compose(&self, other: &GradedMatrix) -> Result<Self> {
        if !self.dom.compatible(&other.cod) {
            return Err(SuperError::Dimension(format!(
                "cannot compose {}x{} after {}x{}",
                self.rows(),
                self.cols(),
                other.rows(),
                other.cols()
            )));
        }
        let mode = self.mode.combine(other.mode)?;
        let a = self.promote(mode)?;
        let b = other.promote(mode)?;
        let coeffs = convolve(&a.coeffs, &b.coeffs, mode.coeff_count(), |x, y| x * y);
        Ok(GradedMatrix::from_parts(other.dom.clone(), self.cod.clone(), mode, coeffs))
    }

    pub fn scale(&self, s: &Scalar) -> Result<Self> {
        let mode = self.mode.combine(s.mode())?;
        let a = self.promote(mode)?;
        let sc = s.coeffs_in(mode)?;
        let scal: Vec<CMat> = sc.iter().map(|z| CMat::from_element(1, 1, *z)).collect();
        let coeffs = convolve(&scal, &a.coeffs, mode.coeff_count(), |z, m| m * z[(0, 0)]);
        Ok(GradedMatrix::from_parts(self.dom.clone(), self.cod.clone(), mode, coeffs))
    }

    pub fn scale_complex(&self, c: Complex64) -> Self {
        let coeffs = self.coeffs.iter().map(|m| m * c).collect();
        GradedMatrix { dom: self.dom.clone(), cod: self.cod.clone(), mode: self.mode, coeffs }
    }

    /// Keeps the block of entries of parity `p` (entry `(i,j)` has parity `|i| + |j|`).
    pub fn parity_component(&self, p: u8) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .map(|m| {
                CMat::from_fn(m.nrows(), m.ncols(), |i, j| {
                    if (self.cod.parity(i) + self.dom.parity(j)) % 2 == p {
                        m[(i, j)]
                    } else {
                        zero()
                    }
                })
            })
            .collect();
        GradedMatrix { dom: self.dom.clone(), cod: self.cod.clone(), mode: self.mode, coeffs }
    }

    /// Parity when homogeneous; the zero map counts as even.
    pub fn parity(&self) -> Option<u8> {
        let has = |p: u8| self.parity_component(p).max_abs() > 0.0;
        match (has(0), has(1)) {
            (_, false) => Some(0),
            (false, true) => Some(1),
            (true, true) => None,
        }
    }

    pub fn is_square(&self) -> bool {
        self.rows() == self.cols()
    }

    /// Trace (`sup = false`) or supertrace (`sup = true`).
    pub fn trace(&self, sup: bool) -> Result<Scalar> {
        if !self.is_square() {
            return Err(SuperError::NonSquare { rows: self.rows(), cols: self.cols() });
        }
        let coeffs = self
            .coeffs
            .iter()
            .map(|m| {
                (0..m.nrows())
                    .map(|i| if sup && self.cod.parity(i) == 1 { -m[(i, i)] } else { m[(i, i)] })
                    .sum()
            })
            .collect();
        Ok(Scalar::from_mode_coeffs(self.mode, coeffs))
    }

    /// Largest entry modulus over all coefficient matrices.
    pub fn max_abs(&self) -> f64 {
        self.coeffs.iter().flat_map(|m| m.iter()).map(|z| z.norm()).fold(0.0, f64::max)
    }

    /// `max_abs(self - other)`.
    pub fn distance(&self, other: &GradedMatrix) -> Result<f64> {
        Ok(self.try_sub(other)?.max_abs())
    }

    pub fn commutator(&self, other: &GradedMatrix) -> Result<Self> {
        self.try_compose(other)?.try_sub(&other.try_compose(self)?)
    }

    pub fn inverse(&self) -> Result<Self> {
        if !self.is_square() {
            return Err(SuperError::NonSquare { rows: self.rows(), cols: self.cols() });
        }
        let b0 = self.coeffs[0].clone().try_inverse().ok_or(SuperError::Singular)?;
        let mut b = vec![b0.clone()];
        for k in 1..self.coeffs.len() {
            let mut s = CMat::zeros(self.rows(), self.cols());
            for j in 1..=k {
                s += &self.coeffs[j] * &b[k - j];
            }
            b.push(-(&b0 * s));
        }
        Ok(GradedMatrix { dom: self.cod.clone(), cod: self.dom.clone(), mode: self.mode, coeffs: b })
    }

    pub fn pow(&self, k: u32) -> Result<Self> {
        let mut out = GradedMatrix::identity(&self.dom, self.mode);
        for _ in 0..k {
            out = out.try_compose(self)?;
        }
        Ok(out)
    }

    /// Complex matrix obtained by substituting a numerical value of `h`.
    pub fn eval_at(&self, h: Complex64) -> Self {
        let m = self.coeffs.iter().rev().fold(CMat::zeros(self.rows(), self.cols()), |acc, c| acc * h + c);
        GradedMatrix { dom: self.dom.clone(), cod: self.cod.clone(), mode: Mode::Complex, coeffs: vec![m] }
    }

    /// Same entries, relabelled spaces (parities must agree).
    pub fn with_spaces(&self, dom: SuperSpace, cod: SuperSpace) -> Result<Self> {
        if !dom.compatible(&self.dom) || !cod.compatible(&self.cod) {
            return Err(SuperError::Dimension("relabelling must keep parities".into()));
        }
        Ok(GradedMatrix { dom, cod, mode: self.mode, coeffs: self.coeffs.clone() })
    }
}

macro_rules! matrix_op {
    ($trait:ident, $method:ident, $try:ident) => {
        impl $trait<&GradedMatrix> for &GradedMatrix {
            type Output = GradedMatrix;
            fn $method(self, rhs: &GradedMatrix) -> GradedMatrix {
                self.$try(rhs).expect("incompatible graded matrices")
            }
        }
        impl $trait<GradedMatrix> for GradedMatrix {
            type Output = GradedMatrix;
            fn $method(self, rhs: GradedMatrix) -> GradedMatrix {
                (&self).$try(&rhs).expect("incompatible graded matrices")
            }
        }
    };
}

matrix_op!(Add, add, try_add);
matrix_op!(Sub, sub, try_sub);
matrix_op!(Mul, mul, try_compose);

impl Neg for &GradedMatrix {
    type Output = GradedMatrix;
    fn neg(self) -> GradedMatrix {
        self.scale_complex(Complex64::new(-1.0, 0.0))
    }
}

impl Neg for GradedMatrix {
    type Output = GradedMatrix;
    fn neg(self) -> GradedMatrix {
        -&self
    }
}
