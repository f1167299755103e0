use std::f64::consts::PI;

use bialgebra::{builtin_algebra, classical_r, AlgebraSpec, Representation};
use monodromy::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use supercore::{
    c64, flip_terms, koszul_flip, place_pair, place_single, Complex64, GradedMatrix, Mode, PureTensor, SuperSpace,
};

fn setup(name: &str) -> (AlgebraSpec, Representation, Vec<PureTensor>, GradedMatrix) {
    let spec = builtin_algebra(name).unwrap();
    let rep = spec.rep("vector").unwrap().clone();
    let terms = classical_r(&spec, &rep, &rep).unwrap().terms;
    let s = match name {
        "sl2" => rep.image(1).scale_complex(c64(0.7, 0.0)),
        _ => spec.cartan_element(&rep, &[0.4, -0.9]).unwrap(),
    };
    (spec, rep, terms, s)
}

fn rng() -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(20)
}

fn random_u(rng: &mut ChaCha8Rng) -> Complex64 {
    c64(rng.gen_range(-2.0..2.0), rng.gen_range(-PI..PI))
}

/// `r(u)` placed in slots `(j, k)` of `spaces`.
fn placed_r(terms: &[PureTensor], j: usize, k: usize, u: Complex64, spaces: &[SuperSpace]) -> GradedMatrix {
    let x = u.exp();
    let a = place_pair(terms, j, k, spaces).unwrap().scale_complex(1.0 / (x - 1.0));
    let b = place_pair(terms, k, j, spaces).unwrap().scale_complex(x / (x - 1.0));
    a.try_add(&b).unwrap()
}

#[test]
fn r_at_i_pi() {
    for name in ["sl2", "gl11"] {
        let (_, rep, terms, _) = setup(name);
        let v = &rep.space;
        let r = place_pair(&terms, 1, 2, &[v.clone(), v.clone()]).unwrap();
        let r21 = place_pair(&terms, 2, 1, &[v.clone(), v.clone()]).unwrap();
        let want = r21.try_sub(&r).unwrap().scale_complex(c64(0.5, 0.0));
        assert!(trig_r_eval(&terms, v, c64(0.0, PI)).unwrap().distance(&want).unwrap() < 1e-15);
    }
}

#[test]
fn unitarity() {
    let mut rng = rng();
    for name in ["sl2", "gl11"] {
        let (_, rep, terms, _) = setup(name);
        let v = &rep.space;
        let f = koszul_flip(v, v);
        for _ in 0..20 {
            let u = random_u(&mut rng);
            let a = trig_r_eval(&terms, v, u).unwrap();
            let b = f.try_compose(&trig_r_eval(&terms, v, -u).unwrap()).unwrap().try_compose(&f).unwrap();
            assert!(a.try_add(&b).unwrap().max_abs() < 1e-12, "{name} u = {u}");
        }
    }
}

#[test]
fn residue_at_zero_is_casimir() {
    let (spec, rep, terms, _) = setup("sl2");
    let omega = bialgebra::casimir_in_rep(&spec, &rep, &rep).unwrap();
    let mut prev = f64::INFINITY;
    for k in 2..7 {
        let u = 10f64.powi(-k);
        let d = trig_r_eval(&terms, &rep.space, c64(u, 0.0)).unwrap().scale_complex(c64(u, 0.0)).distance(&omega).unwrap();
        // Ω/u + r_21 + O(u): u·r(u) - Ω = u·r_21 + O(u²)
        assert!(d < 2.0 * u, "u = {u}: {d}");
        assert!(d < prev);
        prev = d;
    }
}

#[test]
fn poles_are_rejected() {
    let (_, rep, terms, _) = setup("sl2");
    assert!(matches!(trig_r_eval(&terms, &rep.space, c64(0.0, 2.0 * PI + 1e-9)), Err(MonoError::Pole(_))));
    assert!(matches!(trig_r_eval(&terms, &rep.space, c64(0.0, 0.0)), Err(MonoError::Pole(_))));
}

#[test]
fn spectral_cybe() {
    let mut rng = rng();
    for name in ["sl2", "gl11"] {
        let (_, rep, terms, _) = setup(name);
        let spaces = vec![rep.space.clone(); 3];
        let mut checked = 0;
        while checked < 20 {
            let z: Vec<Complex64> = (0..3).map(|_| random_u(&mut rng).exp()).collect();
            let u: Vec<Complex64> = z.iter().map(|z| z.ln()).collect();
            if (0..3).any(|a| (0..a).any(|b| lattice_distance(u[a] - u[b]) < 0.2)) {
                continue;
            }
            let r12 = placed_r(&terms, 1, 2, u[0] - u[1], &spaces);
            let r13 = placed_r(&terms, 1, 3, u[0] - u[2], &spaces);
            let r23 = placed_r(&terms, 2, 3, u[1] - u[2], &spaces);
            let total = r12
                .commutator(&r13)
                .unwrap()
                .try_add(&r12.commutator(&r23).unwrap())
                .unwrap()
                .try_add(&r13.commutator(&r23).unwrap())
                .unwrap();
            assert!(total.max_abs() < 1e-11, "{name}: {}", total.max_abs());
            checked += 1;
        }
    }
}

#[test]
fn connection_edge_cases() {
    let (spec, rep, _, s) = setup("sl2");
    let one = KzSystem::new(1, Kind::Trig, c64(0.3, 0.1), &spec, &rep, &s).unwrap();
    let p = ConfigPoint::u(vec![c64(0.7, -0.2)]).unwrap();
    let want = s.scale_complex(c64(0.3, 0.1) / c64(0.0, 2.0 * PI));
    assert!(one.connection(1, &p).unwrap().distance(&want).unwrap() < 1e-16);

    for kind in [Kind::Trig, Kind::Rational] {
        let zero = KzSystem::new(3, kind, c64(0.0, 0.0), &spec, &rep, &s).unwrap();
        let p = ConfigPoint::z(vec![c64(1.0, 0.0), c64(2.0, 0.3), c64(-1.0, 1.0)]).unwrap();
        for k in 1..=3 {
            assert_eq!(zero.connection(k, &p).unwrap().max_abs(), 0.0);
        }
        assert_eq!(zero.flatness_residual(&p).unwrap(), 0.0);
    }
}

#[test]
fn two_point_connection_matches_hand_assembly() {
    let (spec, rep, terms, s) = setup("sl2");
    let h = c64(0.2, 0.0);
    let sys = KzSystem::new(2, Kind::Trig, h, &spec, &rep, &s).unwrap();
    let p = ConfigPoint::u(vec![c64(0.3, 0.0), c64(0.3, PI)]).unwrap();
    let r = trig_r_eval(&terms, &rep.space, c64(0.0, -PI)).unwrap();
    let s1 = place_single(&s, 1, &[rep.space.clone(), rep.space.clone()]).unwrap();
    let want = r.try_add(&s1).unwrap().scale_complex(h / c64(0.0, 2.0 * PI));
    let got = sys.connection(1, &p).unwrap();
    let diff = got.try_sub(&want).unwrap();
    assert!(diff.max_abs() < 1e-14, "{}", diff.max_abs());
}

fn random_points(n: usize, count: usize, clearance: f64, rng: &mut ChaCha8Rng) -> Vec<ConfigPoint> {
    let mut out = Vec::new();
    while out.len() < count {
        let u: Vec<Complex64> = (0..n).map(|_| random_u(rng)).collect();
        if (0..n).any(|a| (0..a).any(|b| lattice_distance(u[a] - u[b]) < clearance)) {
            continue;
        }
        out.push(ConfigPoint::u(u).unwrap());
    }
    out
}

#[test]
fn trig_flatness_sl2_three_points() {
    let (spec, rep, _, s) = setup("sl2");
    let sys = KzSystem::new(3, Kind::Trig, c64(0.2, 0.0), &spec, &rep, &s).unwrap();
    for p in random_points(3, 10, 0.3, &mut rng()) {
        let res = sys.flatness_residual(&p).unwrap();
        assert!(res < 1e-12, "{res}");
    }
}

#[test]
fn trig_flatness_both_algebras_up_to_four_points() {
    let mut rng = rng();
    for name in ["sl2", "gl11"] {
        let (spec, rep, _, s) = setup(name);
        for n in 2..=4 {
            let sys = KzSystem::new(n, Kind::Trig, c64(0.35, -0.1), &spec, &rep, &s).unwrap();
            for p in random_points(n, 5, 0.3, &mut rng) {
                let res = sys.flatness_residual(&p).unwrap();
                assert!(res < 1e-10, "{name} n={n}: {res}");
            }
        }
    }
}

#[test]
fn rational_flatness() {
    let mut rng = rng();
    for name in ["sl2", "gl11"] {
        let (spec, rep, _, s) = setup(name);
        let sys = KzSystem::new(3, Kind::Rational, c64(0.5, 0.0), &spec, &rep, &s).unwrap();
        for p in random_points(3, 5, 0.3, &mut rng) {
            assert!(sys.flatness_residual(&p.to_z()).unwrap() < 1e-12);
        }
    }
}

#[test]
fn incompatible_s_breaks_flatness() {
    let (spec, rep, _, _) = setup("sl2");
    let s = rep.image(0).clone();
    let p = ConfigPoint::u(vec![c64(0.1, 0.2), c64(-0.4, 1.9), c64(0.8, -2.3)]).unwrap();
    let res = |h: f64| {
        KzSystem::new(3, Kind::Trig, c64(h, 0.0), &spec, &rep, &s).unwrap().flatness_residual(&p).unwrap()
    };
    assert!(res(1.0) > 1e-3, "{}", res(1.0));
    // every surviving curvature term is quadratic in h
    assert!((res(1.0) / res(0.2) - 25.0).abs() < 1e-9);
}

#[test]
fn rational_kind_uses_casimir() {
    let (spec, rep, terms, s) = setup("gl11");
    let h = c64(0.3, 0.0);
    let sys = KzSystem::new(2, Kind::Rational, h, &spec, &rep, &s).unwrap();
    let p = ConfigPoint::z(vec![c64(1.0, 0.5), c64(-0.5, 2.0)]).unwrap();
    let spaces = [rep.space.clone(), rep.space.clone()];
    let mut all = terms.clone();
    all.extend(flip_terms(&terms));
    let omega = place_pair(&all, 1, 2, &spaces).unwrap();
    let want = omega.scale_complex(h / c64(0.0, 2.0 * PI) / (c64(1.0, 0.5) - c64(-0.5, 2.0)));
    assert!(sys.connection(1, &p).unwrap().distance(&want).unwrap() < 1e-15);
    let _ = GradedMatrix::identity(&rep.space, Mode::Complex);
}
