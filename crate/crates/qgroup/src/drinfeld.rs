use supercore::{c64, contract_leading_pair, decompose_pair, place_pair, place_single, GradedMatrix, Mode, Scalar, SuperSpace};

use crate::error::{QError, Result};
use crate::expr::{eval_universal, Term, UniversalExpr};
use crate::hopf::{Factor, HopfPresentation, HopfRep};
use crate::poly::CartanPoly;

/// Largest disagreement tolerated between the two routes for `C`.
pub const ROUTE_TOL: f64 = 1e-11;

/// Order of the factors in `m_01(T_{0·}⋯)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LegOrder {
    /// `T_01 T_02 ⋯ T_0n`.
    Leading,
    /// `T_02 ⋯ T_0n T_01`.
    Trailing,
}

fn q_power(h: &Scalar, m: f64) -> Scalar {
    h.scale(c64(0.5 * m, 0.0)).exp()
}

/// `[k]_q = Σ_j q^{k-1-2j}`.
fn q_number(h: &Scalar, k: usize) -> Scalar {
    (0..k).fold(Scalar::zero(), |acc, j| &acc + &q_power(h, k as f64 - 1.0 - 2.0 * j as f64))
}

/// `q^{k(k-1)/2} (q - q^{-1})^k / [k]_q!`.
pub fn sl2_coefficient(h: &Scalar, k: usize) -> Result<Scalar> {
    let diff = &q_power(h, 1.0) - &q_power(h, -1.0);
    let mut fact = Scalar::one();
    for j in 1..=k {
        fact = &fact * &q_number(h, j);
    }
    let num = &q_power(h, (k * k.saturating_sub(1)) as f64 / 2.0) * &diff.powi(k as u32);
    Ok(num.try_div(&fact)?)
}

/// The universal R-matrix with powers of nilpotent generators up to `trunc`.
pub fn universal_r(hopf: &HopfPresentation, trunc: usize) -> Result<UniversalExpr> {
    let h = &hopf.h;
    match hopf.name.as_str() {
        "sl2" => {
            let mut prefactor = CartanPoly::zero();
            prefactor.add_quadratic((0, 0), (1, 0), &h.scale(c64(0.25, 0.0)));
            let mut terms = Vec::new();
            for k in 0..=trunc {
                terms.push(Term { coeff: sl2_coefficient(h, k)?, words: vec![vec![Factor::Gen(0); k], vec![Factor::Gen(1); k]] });
            }
            Ok(UniversalExpr { legs: 2, prefactor, terms, truncation: Some(trunc) })
        }
        "gl11" => {
            let mut prefactor = CartanPoly::zero();
            prefactor.add_quadratic((0, 0), (1, 1), h);
            let odd = &h.exp() - &Scalar::one();
            let ekinv = Factor::Cartan(CartanPoly::linear(0, -h));
            let terms = vec![
                Term { coeff: Scalar::one(), words: vec![vec![], vec![]] },
                Term { coeff: odd, words: vec![vec![ekinv, Factor::Gen(0)], vec![Factor::Gen(1)]] },
            ];
            Ok(UniversalExpr { legs: 2, prefactor, terms, truncation: None })
        }
        other => Err(QError::UnknownAlgebra(other.into())),
    }
}

/// The universal R-matrix truncated at the nilpotency degree of `rep`.
pub fn universal_r_for(hopf: &HopfPresentation, rep: &HopfRep) -> Result<UniversalExpr> {
    universal_r(hopf, rep.space.dim().saturating_sub(1))
}

/// `T = (1⊗S)(R)`.
pub fn drinfeld_t(hopf: &HopfPresentation, rep: &HopfRep) -> Result<UniversalExpr> {
    universal_r_for(hopf, rep)?.apply_antipode_leg(hopf, 1)
}

/// `U = m(T)` evaluated in `rep`.
pub fn drinfeld_u(hopf: &HopfPresentation, rep: &HopfRep) -> Result<GradedMatrix> {
    let u = drinfeld_t(hopf, rep)?.multiply_adjacent_legs(hopf, 0)?;
    eval_universal(hopf, &u, rep)
}

/// `C` computed from placed copies of `ρ⊗ρ(T)` on `n + 1` slots, contracted
/// by multiplying slots 0 and 1.
pub fn drinfeld_c_placed(hopf: &HopfPresentation, rep: &HopfRep, n: usize, order: LegOrder) -> Result<GradedMatrix> {
    check_n(n)?;
    let v = &rep.space;
    let t = eval_universal(hopf, &drinfeld_t(hopf, rep)?, rep)?;
    let pieces = decompose_pair(&t, v, v)?;
    let spaces = vec![v.clone(); n + 1];
    let total = SuperSpace::tensor_all(&spaces)?;
    let mut slots: Vec<usize> = (2..=n).collect();
    match order {
        LegOrder::Leading => slots.insert(0, 1),
        LegOrder::Trailing => slots.push(1),
    }
    let mut prod = GradedMatrix::identity(&total, Mode::Complex);
    for j in slots {
        prod = prod.try_compose(&place_pair(&pieces, 1, j + 1, &spaces)?)?;
    }
    let rest = if n > 1 { Some(SuperSpace::tensor_all(&spaces[2..])?) } else { None };
    Ok(contract_leading_pair(&prod, v, rest.as_ref())?)
}

/// `C` computed from the coproduct of `T` on the expression level.
pub fn drinfeld_c_hexagon(hopf: &HopfPresentation, rep: &HopfRep, n: usize, order: LegOrder) -> Result<GradedMatrix> {
    check_n(n)?;
    let t = drinfeld_t(hopf, rep)?;
    match order {
        LegOrder::Leading => {
            let e = t.iterate_coproduct(hopf, 1, n)?.multiply_adjacent_legs(hopf, 0)?;
            eval_universal(hopf, &e, rep)
        }
        LegOrder::Trailing => {
            let u = drinfeld_u(hopf, rep)?;
            if n == 1 {
                return Ok(u);
            }
            let e = t.iterate_coproduct(hopf, 1, n - 1)?;
            let spaces = vec![rep.space.clone(); n];
            Ok(eval_universal(hopf, &e, rep)?.try_compose(&place_single(&u, 1, &spaces)?)?)
        }
    }
}

/// `C` on `V^{⊗n}`: both routes are computed and must agree within
/// [`ROUTE_TOL`]; the placed route is returned.
pub fn drinfeld_c(hopf: &HopfPresentation, rep: &HopfRep, n: usize, order: LegOrder) -> Result<GradedMatrix> {
    let a = drinfeld_c_placed(hopf, rep, n, order)?;
    let b = drinfeld_c_hexagon(hopf, rep, n, order)?;
    let gap = a.distance(&b)?;
    if gap.is_nan() || gap > ROUTE_TOL {
        return Err(QError::RouteMismatch(gap));
    }
    Ok(a)
}

fn check_n(n: usize) -> Result<()> {
    if n == 0 {
        return Err(QError::LegCount { expected: 1, found: 0 });
    }
    Ok(())
}
