use std::f64::consts::PI;

use bialgebra::{check_s_compatible, classical_r, AlgebraSpec, Representation};
use supercore::{c64, koszul_flip, permutation_operator, Complex64, GradedMatrix, Mode};

use crate::braid::Generator;
use crate::connection::{Kind, KzSystem};
use crate::error::{MonoError, Result};
use crate::evaluator::{GeneratorSource, Provenance, WordEvaluator};
use crate::loops::{end_permutation, generator_loop};
use crate::transport::{transport, TransportParams};

/// Largest `[s⊗1 + 1⊗s, r]` accepted as compatible.
pub const COMPATIBILITY_TOL: f64 = 1e-10;

/// Monodromy of the trig system along the standard loops: `M(g) = P_τ·Φ_g`.
pub struct NumericSource {
    system: KzSystem,
    params: TransportParams,
}

impl NumericSource {
    pub fn new(system: KzSystem, params: TransportParams) -> Self {
        NumericSource { system, params }
    }

    pub fn system(&self) -> &KzSystem {
        &self.system
    }
}

impl GeneratorSource for NumericSource {
    fn generator(&self, g: Generator) -> Result<GradedMatrix> {
        let n = self.system.n();
        let path = generator_loop(g, n)?;
        let phi = transport(&self.system, &path, &self.params)?;
        let spaces = vec![self.system.slot_space().clone(); n];
        let p = permutation_operator(&end_permutation(g, n), &spaces)?;
        Ok(p.try_compose(&phi)?)
    }
}

/// Numeric monodromy representation of the trig KZ system with one
/// representation on every strand.
pub fn monodromy_rep(
    n: usize,
    h: Complex64,
    s: &GradedMatrix,
    spec: &AlgebraSpec,
    rep: &Representation,
    params: TransportParams,
) -> Result<WordEvaluator> {
    if n == 0 {
        return Err(MonoError::InvalidGenerator("n = 0".into()));
    }
    let r = classical_r(spec, rep, rep)?;
    let compat = check_s_compatible(s, &r.terms, &rep.space)?;
    if compat > COMPATIBILITY_TOL {
        return Err(MonoError::Incompatible(compat));
    }
    let system = KzSystem::new(n, Kind::Trig, h, spec, rep, s)?;
    let space = system.space().clone();
    Ok(WordEvaluator::new(n, Provenance::Numeric, space, Box::new(NumericSource::new(system, params))))
}

/// Compares the first-order term of `M(b_1)` at small `h` (n = 2) with its
/// closed form `σ(1 + h·Φ₁)`, where along the upper half-turn
/// `Φ₁ = (1/2πi)[2 log 2·r_{21} + (iπ − log 2)Ω + log 2·(s^{(1)} − s^{(2)})]`.
/// The opposite orientation flips the sign of the `iπ` term. Returns the
/// max-norm mismatch, which is `O(h)`.
pub fn exchange_orientation_residual(
    spec: &AlgebraSpec,
    rep: &Representation,
    s: &GradedMatrix,
    params: &TransportParams,
) -> Result<f64> {
    let h = 1e-4;
    let system = KzSystem::new(2, Kind::Trig, c64(h, 0.0), spec, rep, s)?;
    let m = NumericSource::new(system, *params).generator(Generator::B(1))?;
    let space = &rep.space;
    let sigma = koszul_flip(space, space);
    let full = space.tensor(space);
    let first = sigma.try_compose(&m)?.try_sub(&GradedMatrix::identity(&full, Mode::Complex))?.scale_complex(c64(1.0 / h, 0.0));

    let r = classical_r(spec, rep, rep)?;
    let spaces = [space.clone(), space.clone()];
    let r21 = supercore::place_pair(&r.terms, 2, 1, &spaces)?;
    let omega = r.matrix.try_add(&r21)?;
    let l2 = 2f64.ln();
    let s1 = supercore::place_single(s, 1, &spaces)?;
    let s2 = supercore::place_single(s, 2, &spaces)?;
    let predicted = r21
        .scale_complex(c64(2.0 * l2, 0.0))
        .try_add(&omega.scale_complex(c64(-l2, PI)))?
        .try_add(&s1.try_sub(&s2)?.scale_complex(c64(l2, 0.0)))?
        .scale_complex(1.0 / c64(0.0, 2.0 * PI));
    Ok(first.distance(&predicted)?)
}
