use std::f64::consts::PI;

use bialgebra::{builtin_algebra, AlgebraSpec, Representation};
use monodromy::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use supercore::{c64, expm_complex, koszul_flip, matrix_exp, CMat, Complex64, GradedMatrix, Mode, SuperSpace};

fn re(x: f64) -> Complex64 {
    c64(x, 0.0)
}

fn setup(name: &str) -> (AlgebraSpec, Representation, GradedMatrix) {
    let spec = builtin_algebra(name).unwrap();
    let rep = spec.rep("vector").unwrap().clone();
    let s = match name {
        "sl2" => rep.image(1).scale_complex(re(0.7)),
        _ => spec.cartan_element(&rep, &[0.4, -0.9]).unwrap(),
    };
    (spec, rep, s)
}

fn system(name: &str, n: usize, h: f64) -> KzSystem {
    let (spec, rep, s) = setup(name);
    KzSystem::new(n, Kind::Trig, re(h), &spec, &rep, &s).unwrap()
}

struct Constant {
    space: SuperSpace,
    a: CMat,
}

impl Connection for Constant {
    fn space(&self) -> &SuperSpace {
        &self.space
    }

    fn coefficient(&self, _: Chart, _: &[Complex64], vel: &[Complex64]) -> monodromy::Result<CMat> {
        Ok(&self.a * vel[0])
    }
}

fn max_entry(m: &CMat) -> f64 {
    m.iter().map(|z| z.norm()).fold(0.0, f64::max)
}

#[test]
fn constant_connection_gives_exponential() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let space = SuperSpace::standard(2, 1).unwrap();
    let a = CMat::from_fn(3, 3, |_, _| c64(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)));
    let conn = Constant { space: space.clone(), a: a.clone() };
    let u0 = c64(0.2, 0.1);
    let p = TransportParams::default();

    let seg = Segment::new(vec![Trajectory::Line(u0, u0 + 1.0)]);
    let phi = transport_open(&conn, Chart::U, std::slice::from_ref(&seg), &p).unwrap();
    assert!(max_entry(&(phi.complex().unwrap() - expm_complex(&a))) < 1e-10);
    assert!(matches!(LoopPath::new(Chart::U, vec![seg], vec![0]), Err(MonoError::Endpoint(_))));

    // u → u + 2πi closes modulo the lattice
    let a = a * c64(0.2, 0.0);
    let conn = Constant { space, a: a.clone() };
    let du = c64(0.0, 2.0 * PI);
    let lap = LoopPath::new(Chart::U, vec![Segment::new(vec![Trajectory::Line(u0, u0 + du)])], vec![0]).unwrap();
    let phi = transport(&conn, &lap, &p).unwrap();
    let want = expm_complex(&(&a * du));
    // entries reach about 3.6 here, so the relative tolerance governs
    assert!(max_entry(&(phi.complex().unwrap() - &want)) < 1e-10 * max_entry(&want));
}

#[test]
fn contractible_square_has_trivial_holonomy() {
    let sys = system("sl2", 3, 0.2);
    let corners = [c64(1.95, -0.05), c64(2.05, -0.05), c64(2.05, 0.05), c64(1.95, 0.05)];
    let segments = (0..4)
        .map(|i| {
            Segment::new(vec![
                Trajectory::Const(re(1.0)),
                Trajectory::Line(corners[i], corners[(i + 1) % 4]),
                Trajectory::Const(re(3.0)),
            ])
        })
        .collect();
    let path = LoopPath::new(Chart::Z, segments, vec![0, 1, 2]).unwrap();
    let phi = transport(&sys, &path, &TransportParams::default()).unwrap();
    assert!(phi.distance(&GradedMatrix::identity(sys.space(), Mode::Complex)).unwrap() < 1e-8);
}

#[test]
fn step_halving_is_stable() {
    let sys = system("sl2", 2, 0.2);
    let path = generator_loop(Generator::B(1), 2).unwrap();
    let p = TransportParams { validate: false, ..TransportParams::default() };
    let coarse = transport(&sys, &path, &p).unwrap();
    let fine = transport(&sys, &path, &TransportParams { max_step: p.max_step / 2.0, ..p }).unwrap();
    assert!(coarse.distance(&fine).unwrap() < 1e-9);
    assert!(transport(&sys, &path, &TransportParams::default()).is_ok());
}

#[test]
fn path_through_a_pole_fails() {
    let sys = system("sl2", 2, 0.2);
    let seg = |a: f64, b: f64| Segment::new(vec![Trajectory::Line(re(a), re(b)), Trajectory::Const(re(2.0))]);
    let path = LoopPath::new(Chart::Z, vec![seg(1.0, 3.0), seg(3.0, 1.0)], vec![0, 1]).unwrap();
    assert!(path.check_clearance(DEFAULT_CLEARANCE).is_err());
    assert!(transport(&sys, &path, &TransportParams::default()).is_err());
}

#[test]
fn one_strand_loop_is_exp_hs() {
    for name in ["sl2", "gl11"] {
        let (spec, rep, s) = setup(name);
        let h = c64(0.3, 0.2);
        let ev = monodromy_rep(1, h, &s, &spec, &rep, TransportParams::default()).unwrap();
        let want = matrix_exp(&s.scale_complex(h)).unwrap();
        assert!(ev.generator(Generator::X(1)).unwrap().distance(&want).unwrap() < 1e-10);
    }
}

#[test]
fn zero_coupling_gives_flips() {
    for name in ["sl2", "gl11"] {
        let (spec, rep, s) = setup(name);
        let ev = monodromy_rep(2, re(0.0), &s, &spec, &rep, TransportParams::default()).unwrap();
        let flip = koszul_flip(&rep.space, &rep.space);
        assert!(ev.generator(Generator::B(1)).unwrap().distance(&flip).unwrap() < 1e-15);
        for j in 1..=2 {
            let id = GradedMatrix::identity(ev.space(), Mode::Complex);
            assert!(ev.generator(Generator::X(j)).unwrap().distance(&id).unwrap() < 1e-15);
        }
    }
}

#[test]
fn two_strand_relation() {
    let (spec, rep, s) = setup("sl2");
    let ev = monodromy_rep(2, re(0.2), &s, &spec, &rep, TransportParams::default()).unwrap();
    let lhs = ev.eval(&"b1 X1 b1".parse().unwrap()).unwrap();
    let rhs = ev.generator(Generator::X(2)).unwrap();
    assert!(lhs.distance(rhs).unwrap() < 1e-8);
}

#[test]
fn homotopic_exchange_paths_agree() {
    for name in ["sl2", "gl11"] {
        let sys = system(name, 3, 0.2);
        let p = TransportParams::default();
        for j in 1..=2 {
            let a = transport(&sys, &generator_loop(Generator::B(j), 3).unwrap(), &p).unwrap();
            let b = transport(&sys, &exchange_loop_alt(j, 3).unwrap(), &p).unwrap();
            assert!(a.distance(&b).unwrap() < 1e-8, "{name} b{j}");
        }
    }
}

#[test]
fn exchange_orientation() {
    for name in ["sl2", "gl11"] {
        let (spec, rep, s) = setup(name);
        let res = exchange_orientation_residual(&spec, &rep, &s, &TransportParams::default()).unwrap();
        assert!(res < 1e-3, "{name}: {res}");
    }
    // the lower half-turn differs at first order by σ·(2πi/2πi)Ω = σΩ
    let (spec, rep, s) = setup("sl2");
    let h = 1e-4;
    let sys = KzSystem::new(2, Kind::Trig, re(h), &spec, &rep, &s).unwrap();
    let c = re(1.5);
    let lower = LoopPath::new(
        Chart::Z,
        vec![Segment::new(vec![
            Trajectory::Arc { center: c, radius: 0.5, from: PI, to: 0.0 },
            Trajectory::Arc { center: c, radius: 0.5, from: 0.0, to: -PI },
        ])],
        vec![1, 0],
    )
    .unwrap();
    let p = TransportParams::default();
    let up = transport(&sys, &generator_loop(Generator::B(1), 2).unwrap(), &p).unwrap();
    let down = transport(&sys, &lower, &p).unwrap();
    let omega = bialgebra::casimir_in_rep(&spec, &rep, &rep).unwrap();
    let diff = up.try_sub(&down).unwrap().scale_complex(re(1.0 / h));
    assert!(diff.distance(&omega).unwrap() < 1e-3);
}

fn relation(ev: &WordEvaluator, a: &str, b: &str) -> f64 {
    ev.eval(&a.parse().unwrap()).unwrap().distance(&ev.eval(&b.parse().unwrap()).unwrap()).unwrap()
}

#[test]
fn group_relations_three_strands() {
    for name in ["sl2", "gl11"] {
        let (spec, rep, s) = setup(name);
        let ev = monodromy_rep(3, re(0.2), &s, &spec, &rep, TransportParams::default()).unwrap();
        ev.warm().unwrap();
        let checks = [
            ("b1 b2 b1", "b2 b1 b2"),
            ("X1 X2", "X2 X1"),
            ("X1 X3", "X3 X1"),
            ("X2 X3", "X3 X2"),
            ("b1 X1", "X2 b1'"),
            ("b2 X2", "X3 b2'"),
        ];
        for (a, b) in checks {
            let r = relation(&ev, a, b);
            assert!(r < 1e-7, "{name}: {a} = {b}: {r}");
        }
        // b_i commutes with X_j for j ∉ {i, i+1}
        assert!(relation(&ev, "b1 X3", "X3 b1") < 1e-7);
    }
}

#[test]
fn distant_exchanges_commute() {
    let (spec, rep, s) = setup("sl2");
    let ev = monodromy_rep(4, re(0.2), &s, &spec, &rep, TransportParams::default()).unwrap();
    assert!(relation(&ev, "b1 b3", "b3 b1") < 1e-7);
}

#[test]
fn generator_cache_is_write_once() {
    let (spec, rep, s) = setup("sl2");
    let ev = monodromy_rep(2, re(0.2), &s, &spec, &rep, TransportParams::default()).unwrap();
    ev.warm().unwrap();
    let a = ev.generator(Generator::B(1)).unwrap() as *const GradedMatrix;
    let b = ev.generator(Generator::B(1)).unwrap() as *const GradedMatrix;
    assert_eq!(a, b);
    let prod = ev.eval(&"b1 b1'".parse().unwrap()).unwrap();
    assert!(prod.distance(&GradedMatrix::identity(ev.space(), Mode::Complex)).unwrap() < 1e-12);
    let w1: BraidWord = "b1 X1".parse().unwrap();
    let w2: BraidWord = "X2' b1".parse().unwrap();
    let joined = ev.eval(&w1.concat(&w2)).unwrap();
    let split = ev.eval(&w1).unwrap().try_compose(&ev.eval(&w2).unwrap()).unwrap();
    assert!(joined.distance(&split).unwrap() < 1e-14);
    assert_eq!(ev.provenance(), Provenance::Numeric);
    assert!(ev.eval(&"b2".parse().unwrap()).is_err());
}

#[test]
fn incompatible_s_is_rejected() {
    let (spec, rep, _) = setup("sl2");
    let s = rep.image(0).clone();
    assert!(matches!(
        monodromy_rep(2, re(0.2), &s, &spec, &rep, TransportParams::default()),
        Err(MonoError::Incompatible(_))
    ));
}
