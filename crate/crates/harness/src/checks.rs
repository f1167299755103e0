//! Residual computations behind every suite check. Each returns the largest
//! residual over its sample; pass/fail is decided by the caller.

use std::f64::consts::PI;

use bialgebra::{classical_r, cybe_residual, rho_r_in_rep, validate_spec, AlgebraSpec, Representation};
use monodromy::{
    exchange_loop_alt, generator_loop, lattice_distance, monodromy_rep, transport, trig_r_eval, BraidWord, ConfigPoint,
    Generator, Kind, KzSystem, TransportParams, WordEvaluator,
};
use qgroup::{drinfeld_c_hexagon, drinfeld_c_placed, drinfeld_u, eval_universal, universal_r_for, HopfPresentation, LegOrder};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use supercore::{
    c64, decompose_pair, koszul_flip, matrix_exp, place_pair, CMat, Complex64, GradedMatrix, PureTensor, Scalar, Series,
    SuperSpace,
};

use crate::error::Result;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn random_u(rng: &mut ChaCha8Rng) -> Complex64 {
    c64(rng.gen_range(-2.0..2.0), rng.gen_range(-PI..PI))
}

/// `count` points of the cylinder chart whose pairwise differences stay at
/// least `clearance` away from the pole lattice `2πiZ`.
pub fn random_points(n: usize, count: usize, clearance: f64, rng: &mut ChaCha8Rng) -> Vec<ConfigPoint> {
    let mut out = Vec::new();
    while out.len() < count {
        let u: Vec<Complex64> = (0..n).map(|_| random_u(rng)).collect();
        if (0..n).any(|a| (0..a).any(|b| lattice_distance(u[a] - u[b]) < clearance)) {
            continue;
        }
        out.push(ConfigPoint::u(u).expect("distinct points"));
    }
    out
}

/// Largest residual over the Lie superbialgebra axioms.
pub fn classical_axioms(spec: &AlgebraSpec, tol: f64) -> Result<(f64, bool)> {
    let report = validate_spec(spec, tol)?;
    Ok((report.max_residual(), report.passed()))
}

pub fn cybe(spec: &AlgebraSpec, rep: &Representation) -> Result<f64> {
    let r = classical_r(spec, rep, rep)?;
    Ok(cybe_residual(&r.terms, &rep.space)?)
}

pub fn s_compatibility(spec: &AlgebraSpec, rep: &Representation, s: &GradedMatrix) -> Result<f64> {
    let r = classical_r(spec, rep, rep)?;
    Ok(bialgebra::check_s_compatible(s, &r.terms, &rep.space)?)
}

/// `r(u) + r_21(−u)` at random `u`.
pub fn trig_unitarity(spec: &AlgebraSpec, rep: &Representation, count: usize, seed: u64) -> Result<f64> {
    let terms = classical_r(spec, rep, rep)?.terms;
    let v = &rep.space;
    let f = koszul_flip(v, v);
    let mut rng = rng(seed);
    let mut worst = 0.0f64;
    for p in random_points(2, count, 0.2, &mut rng) {
        let u = p.coords()[0] - p.coords()[1];
        let a = trig_r_eval(&terms, v, u)?;
        let b = f.try_compose(&trig_r_eval(&terms, v, -u)?)?.try_compose(&f)?;
        worst = worst.max(a.try_add(&b)?.max_abs());
    }
    Ok(worst)
}

fn placed_r(terms: &[PureTensor], j: usize, k: usize, u: Complex64, spaces: &[SuperSpace]) -> Result<GradedMatrix> {
    let x = u.exp();
    let a = place_pair(terms, j, k, spaces)?.scale_complex(1.0 / (x - 1.0));
    let b = place_pair(terms, k, j, spaces)?.scale_complex(x / (x - 1.0));
    Ok(a.try_add(&b)?)
}

/// `[r12, r13] + [r12, r23] + [r13, r23]` with spectral parameters at random points.
pub fn spectral_cybe(spec: &AlgebraSpec, rep: &Representation, count: usize, seed: u64) -> Result<f64> {
    let terms = classical_r(spec, rep, rep)?.terms;
    let spaces = vec![rep.space.clone(); 3];
    let mut rng = rng(seed);
    let mut worst = 0.0f64;
    for p in random_points(3, count, 0.2, &mut rng) {
        let u = p.coords();
        let r12 = placed_r(&terms, 1, 2, u[0] - u[1], &spaces)?;
        let r13 = placed_r(&terms, 1, 3, u[0] - u[2], &spaces)?;
        let r23 = placed_r(&terms, 2, 3, u[1] - u[2], &spaces)?;
        let total = r12.commutator(&r13)?.try_add(&r12.commutator(&r23)?)?.try_add(&r13.commutator(&r23)?)?;
        worst = worst.max(total.max_abs());
    }
    Ok(worst)
}

/// Curvature of the trigonometric KZ connection at random points.
pub fn flatness(
    spec: &AlgebraSpec,
    rep: &Representation,
    s: &GradedMatrix,
    n: usize,
    h: Complex64,
    count: usize,
    seed: u64,
) -> Result<f64> {
    let sys = KzSystem::new(n, Kind::Trig, h, spec, rep, s)?;
    let mut rng = rng(seed);
    let mut worst = 0.0f64;
    for p in random_points(n, count, 0.1, &mut rng) {
        worst = worst.max(sys.flatness_residual(&p)?);
    }
    Ok(worst)
}

/// Largest coefficient of `R − 1 − h·r` at orders 0 and 1.
pub fn r_first_order(name: &str, spec: &AlgebraSpec, rep: &Representation) -> Result<f64> {
    let h = Scalar::from(Series::h(2)?);
    let hopf = HopfPresentation::builtin(name, &h)?;
    let hrep = hopf.rep_images(rep)?;
    let r = eval_universal(&hopf, &universal_r_for(&hopf, &hrep)?, &hrep)?;
    let classical = classical_r(spec, rep, rep)?.matrix;
    let d = rep.space.dim() * rep.space.dim();
    let amax = |m: CMat| m.iter().map(|z| z.norm()).fold(0.0, f64::max);
    let zero = amax(r.coeff(0) - CMat::identity(d, d));
    let one = amax(r.coeff(1) - classical.coeff(0));
    Ok(zero.max(one))
}

pub fn r_matrix(name: &str, rep: &Representation, h: Complex64) -> Result<GradedMatrix> {
    let hopf = HopfPresentation::builtin(name, &Scalar::from(h))?;
    let hrep = hopf.rep_images(rep)?;
    Ok(eval_universal(&hopf, &universal_r_for(&hopf, &hrep)?, &hrep)?)
}

/// `R12 R13 R23 − R23 R13 R12` on the triple tensor product.
pub fn qybe(name: &str, rep: &Representation, h: Complex64) -> Result<f64> {
    let v = &rep.space;
    let pieces = decompose_pair(&r_matrix(name, rep, h)?, v, v)?;
    let spaces = vec![v.clone(); 3];
    let p = |j, k| place_pair(&pieces, j, k, &spaces);
    let lhs = p(1, 2)?.try_compose(&p(1, 3)?)?.try_compose(&p(2, 3)?)?;
    let rhs = p(2, 3)?.try_compose(&p(1, 3)?)?.try_compose(&p(1, 2)?)?;
    Ok(lhs.distance(&rhs)?)
}

/// Disagreement of the two routes for `C`, over `1..=n_max` and both orders.
pub fn hexagon(name: &str, rep: &Representation, h: Complex64, n_max: usize) -> Result<f64> {
    let hopf = HopfPresentation::builtin(name, &Scalar::from(h))?;
    let hrep = hopf.rep_images(rep)?;
    let mut worst = 0.0f64;
    for n in 1..=n_max {
        for order in [LegOrder::Leading, LegOrder::Trailing] {
            let a = drinfeld_c_placed(&hopf, &hrep, n, order)?;
            let b = drinfeld_c_hexagon(&hopf, &hrep, n, order)?;
            worst = worst.max(a.distance(&b)?);
        }
    }
    Ok(worst)
}

/// `‖U − exp(−hρ_r)‖`.
pub fn drinfeld_u_identity(name: &str, spec: &AlgebraSpec, rep: &Representation, h: Complex64) -> Result<f64> {
    let hopf = HopfPresentation::builtin(name, &Scalar::from(h))?;
    let hrep = hopf.rep_images(rep)?;
    let u = drinfeld_u(&hopf, &hrep)?;
    let want = matrix_exp(&rho_r_in_rep(spec, rep)?.scale_complex(-h))?;
    Ok(u.distance(&want)?)
}

/// Defining relations of the annulus braid group on `n` strands.
pub fn relation_list(n: usize) -> Vec<(BraidWord, BraidWord)> {
    let w = |s: String| -> BraidWord { s.parse().expect("relation syntax") };
    let mut out = Vec::new();
    for i in 1..n {
        if i + 1 < n {
            out.push((w(format!("b{i} b{} b{i}", i + 1)), w(format!("b{} b{i} b{}", i + 1, i + 1))));
        }
        for j in i + 2..n {
            out.push((w(format!("b{i} b{j}")), w(format!("b{j} b{i}"))));
        }
        out.push((w(format!("b{i} X{i}")), w(format!("X{} b{i}'", i + 1))));
        for j in (1..=n).filter(|&j| j != i && j != i + 1) {
            out.push((w(format!("b{i} X{j}")), w(format!("X{j} b{i}"))));
        }
    }
    for j in 1..=n {
        for k in j + 1..=n {
            out.push((w(format!("X{j} X{k}")), w(format!("X{k} X{j}"))));
        }
    }
    out
}

/// Largest relation residual of an evaluator.
pub fn relations(ev: &WordEvaluator) -> Result<f64> {
    ev.warm()?;
    let mut worst = 0.0f64;
    for (a, b) in relation_list(ev.n()) {
        worst = worst.max(ev.eval(&a)?.distance(&ev.eval(&b)?)?);
    }
    Ok(worst)
}

/// `‖M(X_1) − exp(hs)‖` for the numeric one-strand monodromy.
pub fn closed_form_n1(
    spec: &AlgebraSpec,
    rep: &Representation,
    s: &GradedMatrix,
    h: Complex64,
    params: TransportParams,
) -> Result<f64> {
    let ev = monodromy_rep(1, h, s, spec, rep, params)?;
    let want = matrix_exp(&s.scale_complex(h))?;
    Ok(ev.generator(Generator::X(1))?.distance(&want)?)
}

/// Transport along the standard and the alternative exchange loop.
pub fn homotopy_invariance(
    spec: &AlgebraSpec,
    rep: &Representation,
    s: &GradedMatrix,
    n: usize,
    h: Complex64,
    params: TransportParams,
) -> Result<f64> {
    let sys = KzSystem::new(n, Kind::Trig, h, spec, rep, s)?;
    let mut worst = 0.0f64;
    for j in 1..n {
        let a = transport(&sys, &generator_loop(Generator::B(j), n)?, &params)?;
        let b = transport(&sys, &exchange_loop_alt(j, n)?, &params)?;
        worst = worst.max(a.distance(&b)?);
    }
    Ok(worst)
}

/// Drift of every generator transport when `max_step` is halved.
pub fn step_halving(
    spec: &AlgebraSpec,
    rep: &Representation,
    s: &GradedMatrix,
    n: usize,
    h: Complex64,
    params: TransportParams,
) -> Result<f64> {
    let sys = KzSystem::new(n, Kind::Trig, h, spec, rep, s)?;
    let coarse = TransportParams { validate: false, ..params };
    let fine = TransportParams { max_step: params.max_step / 2.0, ..coarse };
    let mut worst = 0.0f64;
    for g in Generator::all(n) {
        let path = generator_loop(g, n)?;
        worst = worst.max(transport(&sys, &path, &coarse)?.distance(&transport(&sys, &path, &fine)?)?);
    }
    Ok(worst)
}
