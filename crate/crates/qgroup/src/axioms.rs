use supercore::{GradedMatrix, Mode, Scalar};

use crate::error::Result;
use crate::expr::{eval_universal, UniversalExpr};
use crate::hopf::{Factor, HopfPresentation, HopfRep};
use crate::poly::CartanPoly;

/// Largest residuals of the Hopf axioms over the generators.
#[derive(Clone, Debug, PartialEq)]
pub struct HopfCheck {
    pub antipode: f64,
    pub coassociativity: f64,
    pub counit: f64,
    pub weights: f64,
}

impl HopfCheck {
    pub fn max(&self) -> f64 {
        self.antipode.max(self.coassociativity).max(self.counit).max(self.weights)
    }
}

/// Generators plus `e^{hH_a}` for each Cartan direction.
fn test_elements(hopf: &HopfPresentation) -> Vec<(String, UniversalExpr, Scalar)> {
    let mut out: Vec<_> = hopf
        .gens
        .iter()
        .enumerate()
        .map(|(g, info)| (info.label.clone(), UniversalExpr::monomial(Scalar::one(), vec![Factor::Gen(g)]), hopf.counit[g].clone()))
        .collect();
    for (a, label) in hopf.cartan_labels.iter().enumerate() {
        let f = Factor::Cartan(CartanPoly::linear(a, hopf.h.clone()));
        out.push((format!("exp(h{label})"), UniversalExpr::monomial(Scalar::one(), vec![f]), Scalar::one()));
    }
    out
}

/// Checks the Hopf axioms on generators in `rep`: `m(S⊗1)Δ = m(1⊗S)Δ = ε`,
/// coassociativity, `(ε⊗1)Δ = (1⊗ε)Δ = id`, and `[H_a, X] = β_a X`.
pub fn check_hopf_axioms(hopf: &HopfPresentation, rep: &HopfRep) -> Result<HopfCheck> {
    let mut check = HopfCheck { antipode: 0.0, coassociativity: 0.0, counit: 0.0, weights: 0.0 };
    let id = GradedMatrix::identity(&rep.space, Mode::Complex);
    for (_, x, eps) in test_elements(hopf) {
        let value = eval_universal(hopf, &x, rep)?;
        let d = x.coproduct_leg(hopf, 0)?;
        let want = id.scale(&eps)?;
        for leg in 0..2 {
            let m = d.apply_antipode_leg(hopf, leg)?.multiply_adjacent_legs(hopf, 0)?;
            check.antipode = check.antipode.max(eval_universal(hopf, &m, rep)?.distance(&want)?);
            let c = d.apply_counit_leg(hopf, leg)?;
            check.counit = check.counit.max(eval_universal(hopf, &c, rep)?.distance(&value)?);
        }
        let left = eval_universal(hopf, &d.coproduct_leg(hopf, 0)?, rep)?;
        let right = eval_universal(hopf, &d.coproduct_leg(hopf, 1)?, rep)?;
        check.coassociativity = check.coassociativity.max(left.distance(&right)?);
    }
    for (g, info) in hopf.gens.iter().enumerate() {
        for (a, beta) in info.weight.iter().enumerate() {
            let hx = rep.cartan[a].commutator(&rep.gens[g])?;
            let want = rep.gens[g].scale_complex(supercore::c64(*beta, 0.0));
            check.weights = check.weights.max(hx.distance(&want)?);
        }
    }
    Ok(check)
}
