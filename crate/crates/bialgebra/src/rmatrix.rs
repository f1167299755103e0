use supercore::{c64, koszul_flip, place_pair, place_single, GradedMatrix, Mode, PureTensor, Scalar, SuperSpace};

use crate::error::{Result, SpecError};
use crate::spec::{AlgebraSpec, Representation};

/// `coeff · g_left ⊗ g_right` in basis indices.
#[derive(Clone, Debug, PartialEq)]
pub struct BasisTensor {
    pub coeff: f64,
    pub left: usize,
    pub right: usize,
}

/// Classical r-matrix: abstract terms, their images and the assembled operator.
#[derive(Clone, Debug)]
pub struct ClassicalR {
    pub abstract_terms: Vec<BasisTensor>,
    pub terms: Vec<PureTensor>,
    pub matrix: GradedMatrix,
}

/// `r = Σ g^+_i ⊗ g^-_i`, plus `½ Σ G^{-1}_{ab} h_a ⊗ h_b` over the shared Cartan block.
pub fn r_abstract(spec: &AlgebraSpec) -> Result<Vec<BasisTensor>> {
    let mut out: Vec<BasisTensor> =
        spec.dual_pairing.iter().map(|&(p, m)| BasisTensor { coeff: 1.0, left: p, right: m }).collect();
    if let Some(msg) = crate::validate::polarization_errors(spec) {
        return Err(SpecError::Polarization(msg));
    }
    let shared = spec.shared_cartan();
    if !shared.is_empty() {
        let n = shared.len();
        let g = supercore::CMat::from_fn(n, n, |a, b| c64(spec.form[shared[a]][shared[b]], 0.0));
        let ginv = g.try_inverse().ok_or_else(|| SpecError::Polarization("shared Cartan block is degenerate".into()))?;
        for a in 0..n {
            for b in 0..n {
                let v = 0.5 * ginv[(a, b)].re;
                if v != 0.0 {
                    out.push(BasisTensor { coeff: v, left: shared[a], right: shared[b] });
                }
            }
        }
    }
    Ok(out)
}

/// `x^{op}`: exchange factors with the Koszul sign.
pub fn flip_abstract(spec: &AlgebraSpec, terms: &[BasisTensor]) -> Vec<BasisTensor> {
    terms
        .iter()
        .map(|t| {
            let s = if spec.parity(t.left) * spec.parity(t.right) == 1 { -1.0 } else { 1.0 };
            BasisTensor { coeff: s * t.coeff, left: t.right, right: t.left }
        })
        .collect()
}

/// Images of abstract terms under `rep ⊗ rep2`.
pub fn evaluate_terms(terms: &[BasisTensor], rep: &Representation, rep2: &Representation) -> Vec<PureTensor> {
    terms
        .iter()
        .map(|t| PureTensor::new(Scalar::from(t.coeff), rep.image(t.left).clone(), rep2.image(t.right).clone()))
        .collect()
}

fn sum_terms(terms: &[PureTensor], v: &SuperSpace, w: &SuperSpace) -> Result<GradedMatrix> {
    let vw = v.tensor(w);
    terms.iter().try_fold(GradedMatrix::zeros(&vw, &vw, Mode::Complex), |acc, t| Ok(acc.try_add(&t.to_matrix()?)?))
}

/// `r` as an operator on `V ⊗ V'`.
pub fn classical_r(spec: &AlgebraSpec, rep: &Representation, rep2: &Representation) -> Result<ClassicalR> {
    let abstract_terms = r_abstract(spec)?;
    let terms = evaluate_terms(&abstract_terms, rep, rep2);
    let matrix = sum_terms(&terms, &rep.space, &rep2.space)?;
    Ok(ClassicalR { abstract_terms, terms, matrix })
}

/// `ρ(ρ_r) = Σ ρ(x_m) ρ(y_m)` for `r = Σ x_m ⊗ y_m`.
pub fn rho_r_in_rep(spec: &AlgebraSpec, rep: &Representation) -> Result<GradedMatrix> {
    r_abstract(spec)?.iter().try_fold(GradedMatrix::zeros(&rep.space, &rep.space, Mode::Complex), |acc, t| {
        let prod = rep.image(t.left).try_compose(rep.image(t.right))?;
        Ok(acc.try_add(&prod.scale_complex(c64(t.coeff, 0.0)))?)
    })
}

/// Terms of `Ω = r + r^{op}`.
pub fn casimir_terms(spec: &AlgebraSpec) -> Result<Vec<BasisTensor>> {
    let r = r_abstract(spec)?;
    let mut out = r.clone();
    out.extend(flip_abstract(spec, &r));
    Ok(out)
}

/// `Ω = r + r^{op}` on `V ⊗ V'`.
pub fn casimir_in_rep(spec: &AlgebraSpec, rep: &Representation, rep2: &Representation) -> Result<GradedMatrix> {
    let terms = evaluate_terms(&casimir_terms(spec)?, rep, rep2);
    sum_terms(&terms, &rep.space, &rep2.space)
}

/// Max-norm of `[r12, r13] + [r12, r23] + [r13, r23]` on `V^{⊗3}`.
pub fn cybe_residual(terms: &[PureTensor], space: &SuperSpace) -> Result<f64> {
    let spaces = vec![space.clone(); 3];
    let r12 = place_pair(terms, 1, 2, &spaces)?;
    let r13 = place_pair(terms, 1, 3, &spaces)?;
    let r23 = place_pair(terms, 2, 3, &spaces)?;
    let total = r12.commutator(&r13)?.try_add(&r12.commutator(&r23)?)?.try_add(&r13.commutator(&r23)?)?;
    Ok(total.max_abs())
}

/// Max-norm of `[s ⊗ 1 + 1 ⊗ s, r]` on `V ⊗ V`.
pub fn check_s_compatible(s: &GradedMatrix, terms: &[PureTensor], space: &SuperSpace) -> Result<f64> {
    if s.parity() != Some(0) {
        return Err(SpecError::OddOperator);
    }
    let spaces = vec![space.clone(); 2];
    let diag = place_single(s, 1, &spaces)?.try_add(&place_single(s, 2, &spaces)?)?;
    let r = place_pair(terms, 1, 2, &spaces)?;
    Ok(diag.commutator(&r)?.max_abs())
}

/// Diagonal action `ρ(x) ⊗ 1 + 1 ⊗ ρ(x)` (Koszul signs included by placement).
pub fn diagonal_action(x: &GradedMatrix, space: &SuperSpace) -> Result<GradedMatrix> {
    let spaces = vec![space.clone(); 2];
    Ok(place_single(x, 1, &spaces)?.try_add(&place_single(x, 2, &spaces)?)?)
}

/// `σ ∘ X ∘ σ` on `V ⊗ V`.
pub fn flip_conjugate(x: &GradedMatrix, space: &SuperSpace) -> Result<GradedMatrix> {
    let f = koszul_flip(space, space);
    Ok(f.try_compose(x)?.try_compose(&f)?)
}
