use bialgebra::{check_s_compatible, classical_r, rho_r_in_rep, AlgebraSpec, Representation};
use monodromy::{Generator, GeneratorSource, MonoError, Provenance, WordEvaluator, COMPATIBILITY_TOL};
use supercore::{embed, koszul_flip, matrix_exp, place_single, GradedMatrix, SuperSpace};

use crate::drinfeld::{drinfeld_c, universal_r_for, LegOrder};
use crate::error::{QError, Result};
use crate::expr::eval_universal;
use crate::hopf::HopfPresentation;

/// Which closed form is used for `X_1`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Convention {
    /// `e^{hρ_r^{(1)}} · m_01(T_02⋯T_0n T_01) · e^{hs^{(1)}}`.
    #[default]
    Corrected,
    /// `e^{h(s + ρ_r)^{(1)}} · m_01(T_01⋯T_0n)`.
    Literal,
}

/// Generator matrices `b_i = σ_{i,i+1} R_{i,i+1}`, `X_{i+1} = b_i X_i b_i`.
pub struct AlgebraicSource {
    b: Vec<GradedMatrix>,
    x: Vec<GradedMatrix>,
}

impl AlgebraicSource {
    pub fn b(&self) -> &[GradedMatrix] {
        &self.b
    }

    pub fn x(&self) -> &[GradedMatrix] {
        &self.x
    }
}

impl GeneratorSource for AlgebraicSource {
    fn generator(&self, g: Generator) -> monodromy::Result<GradedMatrix> {
        match g {
            Generator::B(i) if i >= 1 && i <= self.b.len() => Ok(self.b[i - 1].clone()),
            Generator::X(j) if j >= 1 && j <= self.x.len() => Ok(self.x[j - 1].clone()),
            other => Err(MonoError::InvalidGenerator(other.to_string())),
        }
    }
}

/// Builds the generator matrices for `n` strands carrying `rep`, with
/// `s = Σ s_coeffs[a] h_a` over the declared Cartan basis.
pub fn algebraic_source(
    hopf: &HopfPresentation,
    spec: &AlgebraSpec,
    rep: &Representation,
    n: usize,
    s_coeffs: &[f64],
    convention: Convention,
) -> Result<AlgebraicSource> {
    if n == 0 {
        return Err(QError::LegCount { expected: 1, found: 0 });
    }
    let s = spec.cartan_element(rep, s_coeffs)?;
    let r = classical_r(spec, rep, rep)?;
    let compat = check_s_compatible(&s, &r.terms, &rep.space)?;
    if compat > COMPATIBILITY_TOL {
        return Err(QError::Incompatible(compat));
    }
    let hrep = hopf.rep_images(rep)?;
    let v = &rep.space;
    let spaces = vec![v.clone(); n];

    let rmat = eval_universal(hopf, &universal_r_for(hopf, &hrep)?, &hrep)?;
    let braid = koszul_flip(v, v).try_compose(&rmat)?;
    let b = (1..n).map(|i| embed(&braid, i, 2, &spaces)).collect::<supercore::Result<Vec<_>>>()?;

    let hs = s.scale(&hopf.h)?;
    let hrho = rho_r_in_rep(spec, rep)?.scale(&hopf.h)?;
    let x1 = match convention {
        Convention::Corrected => {
            let c = drinfeld_c(hopf, &hrep, n, LegOrder::Trailing)?;
            let left = place_single(&matrix_exp(&hrho)?, 1, &spaces)?;
            let right = place_single(&matrix_exp(&hs)?, 1, &spaces)?;
            left.try_compose(&c)?.try_compose(&right)?
        }
        Convention::Literal => {
            let c = drinfeld_c(hopf, &hrep, n, LegOrder::Leading)?;
            place_single(&matrix_exp(&hs.try_add(&hrho)?)?, 1, &spaces)?.try_compose(&c)?
        }
    };
    let mut x = vec![x1];
    for bi in &b {
        let last = x.last().expect("nonempty");
        x.push(bi.try_compose(last)?.try_compose(bi)?);
    }
    Ok(AlgebraicSource { b, x })
}

/// The algebraic representation of the braid group as a word evaluator.
pub fn algebraic_rep(
    hopf: &HopfPresentation,
    spec: &AlgebraSpec,
    rep: &Representation,
    n: usize,
    s_coeffs: &[f64],
    convention: Convention,
) -> Result<WordEvaluator> {
    let source = algebraic_source(hopf, spec, rep, n, s_coeffs, convention)?;
    let space = SuperSpace::tensor_all(&vec![rep.space.clone(); n])?;
    Ok(WordEvaluator::new(n, Provenance::Algebraic, space, Box::new(source)))
}
