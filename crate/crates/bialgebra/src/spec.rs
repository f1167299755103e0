use std::collections::BTreeMap;

use supercore::{CMat, GradedMatrix, SuperSpace};

use crate::error::{Result, SpecError};

/// A homogeneous basis vector of the Lie superalgebra.
#[derive(Clone, Debug, PartialEq)]
pub struct BasisElement {
    pub label: String,
    pub parity: u8,
}

/// A finite-dimensional representation: one operator per basis element.
#[derive(Clone, Debug, PartialEq)]
pub struct Representation {
    pub name: String,
    pub space: SuperSpace,
    pub matrices: Vec<GradedMatrix>,
}

impl Representation {
    pub fn new(name: &str, space: SuperSpace, matrices: Vec<CMat>) -> Result<Self> {
        let matrices = matrices
            .into_iter()
            .map(|m| GradedMatrix::endo(&space, m).map_err(SpecError::from))
            .collect::<Result<Vec<_>>>()?;
        Ok(Representation { name: name.to_string(), space, matrices })
    }

    /// Image of basis element `i` (0-based).
    pub fn image(&self, i: usize) -> &GradedMatrix {
        &self.matrices[i]
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }
}

/// Lie superbialgebra presented by structure constants, an invariant form and
/// a Manin-triple polarization.
///
/// Indices are 0-based. Basis elements listed in neither `plus` nor `minus`
/// must belong to `cartan`; they form a shared Cartan block that contributes
/// `½ Σ G^{-1}_{ab} h_a ⊗ h_b` to the r-matrix, `G` being the form on that block.
#[derive(Clone, Debug, PartialEq)]
pub struct AlgebraSpec {
    pub name: String,
    pub basis: Vec<BasisElement>,
    /// `structure[(i * d + j) * d + k] = c_{ij}^k`.
    structure: Vec<f64>,
    pub form: Vec<Vec<f64>>,
    pub plus: Vec<usize>,
    pub minus: Vec<usize>,
    /// `(plus index, minus index)` dual pairs.
    pub dual_pairing: Vec<(usize, usize)>,
    pub cartan: Vec<usize>,
    pub reps: BTreeMap<String, Representation>,
}

impl AlgebraSpec {
    /// Abelian skeleton with zero brackets; fill in with `set_bracket`.
    pub fn new(name: &str, basis: Vec<BasisElement>, form: Vec<Vec<f64>>) -> Self {
        let d = basis.len();
        AlgebraSpec {
            name: name.to_string(),
            basis,
            structure: vec![0.0; d * d * d],
            form,
            plus: Vec::new(),
            minus: Vec::new(),
            dual_pairing: Vec::new(),
            cartan: Vec::new(),
            reps: BTreeMap::new(),
        }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn parity(&self, i: usize) -> u8 {
        self.basis[i].parity
    }

    pub fn label(&self, i: usize) -> &str {
        &self.basis[i].label
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.basis.iter().position(|b| b.label == label)
    }

    /// `c_{ij}^k`.
    pub fn bracket_coeff(&self, i: usize, j: usize, k: usize) -> f64 {
        let d = self.dim();
        self.structure[(i * d + j) * d + k]
    }

    /// Sets `c_{ij}^k` only (no symmetry inferred).
    pub fn set_raw(&mut self, i: usize, j: usize, k: usize, value: f64) {
        let d = self.dim();
        self.structure[(i * d + j) * d + k] = value;
    }

    /// Sets `c_{ij}^k` and the super-antisymmetric partner `c_{ji}^k`.
    pub fn set_bracket(&mut self, i: usize, j: usize, k: usize, value: f64) {
        self.set_raw(i, j, k, value);
        if i != j {
            let s = if self.parity(i) * self.parity(j) == 1 { 1.0 } else { -1.0 };
            self.set_raw(j, i, k, s * value);
        }
    }

    /// Coordinates of `[g_i, g_j]`.
    pub fn bracket(&self, i: usize, j: usize) -> Vec<f64> {
        (0..self.dim()).map(|k| self.bracket_coeff(i, j, k)).collect()
    }

    pub fn add_rep(&mut self, rep: Representation) {
        self.reps.insert(rep.name.clone(), rep);
    }

    pub fn rep(&self, name: &str) -> Result<&Representation> {
        self.reps.get(name).ok_or_else(|| SpecError::UnknownRep(name.to_string()))
    }

    /// Cartan indices that are in neither polarization block.
    pub fn shared_cartan(&self) -> Vec<usize> {
        self.cartan.iter().copied().filter(|i| !self.plus.contains(i) && !self.minus.contains(i)).collect()
    }

    /// Operator of `Σ_a coeffs[a] · h_a` over the declared Cartan basis.
    pub fn cartan_element(&self, rep: &Representation, coeffs: &[f64]) -> Result<GradedMatrix> {
        if coeffs.len() != self.cartan.len() {
            return Err(SpecError::Schema(format!(
                "{} Cartan coefficients for {} Cartan generators",
                coeffs.len(),
                self.cartan.len()
            )));
        }
        let mut out = GradedMatrix::zeros(&rep.space, &rep.space, supercore::Mode::Complex);
        for (&a, &x) in self.cartan.iter().zip(coeffs) {
            out = out.try_add(&rep.image(a).scale_complex(supercore::c64(x, 0.0)))?;
        }
        Ok(out)
    }
}
