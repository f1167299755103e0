use monodromy::*;
use supercore::{c64, Complex64};

fn re(x: f64) -> Complex64 {
    c64(x, 0.0)
}

#[test]
fn exchange_loop_endpoints_and_top() {
    let p = generator_loop(Generator::B(1), 2).unwrap();
    assert_eq!(p.chart(), Chart::Z);
    assert_eq!(p.tau(), &[1, 0]);
    assert_eq!(p.start(), vec![re(1.0), re(2.0)]);
    assert_eq!(p.end(), vec![re(2.0), re(1.0)]);
    assert_eq!(p.segments()[0].position(0.5), vec![c64(1.5, -0.5), c64(1.5, 0.5)]);
}

#[test]
fn loop_around_circle() {
    let p = generator_loop(Generator::X(1), 2).unwrap();
    assert_eq!(p.tau(), &[0, 1]);
    assert!(p.note().is_none());
    for k in 0..=100 {
        let t = k as f64 / 100.0;
        let z = p.segments()[0].position(t);
        assert!((z[0] - Complex64::from_polar(1.0, 2.0 * std::f64::consts::PI * t)).norm() < 1e-14);
        assert_eq!(z[1], re(2.0));
    }
    // counterclockwise: positive imaginary velocity at the start
    assert!(p.segments()[0].velocity(0.0)[0].im > 0.0);
}

#[test]
fn all_generator_loops_keep_clearance() {
    for n in 1..=4 {
        for g in Generator::all(n) {
            let p = generator_loop(g, n).unwrap();
            let (found, _) = p.min_clearance(CLEARANCE_SAMPLES);
            assert!(found >= DEFAULT_CLEARANCE, "{g} n={n}: {found}");
            p.check_clearance(DEFAULT_CLEARANCE).unwrap();
        }
        exchange_loop_alt(1, n.max(2)).unwrap().check_clearance(DEFAULT_CLEARANCE).unwrap();
    }
}

#[test]
fn larger_n_loops_stay_valid() {
    for g in Generator::all(6) {
        generator_loop(g, 6).unwrap().check_clearance(DEFAULT_CLEARANCE).unwrap();
    }
}

#[test]
fn invalid_generators_are_rejected() {
    assert!(matches!(generator_loop(Generator::B(2), 2), Err(MonoError::InvalidGenerator(_))));
    assert!(matches!(generator_loop(Generator::X(3), 2), Err(MonoError::InvalidGenerator(_))));
    assert!(matches!(generator_loop(Generator::B(0), 3), Err(MonoError::InvalidGenerator(_))));
}

#[test]
fn path_invariants_are_enforced() {
    let seg = |a: f64, b: f64| Segment::new(vec![Trajectory::Line(re(a), re(b)), Trajectory::Const(re(5.0))]);
    assert!(matches!(
        LoopPath::new(Chart::Z, vec![seg(1.0, 2.0), seg(2.5, 1.0)], vec![0, 1]),
        Err(MonoError::Discontinuous(_))
    ));
    assert!(matches!(LoopPath::new(Chart::Z, vec![seg(1.0, 2.0)], vec![0, 1]), Err(MonoError::Endpoint(_))));
    let close = LoopPath::new(Chart::Z, vec![seg(1.0, 4.95), seg(4.95, 1.0)], vec![0, 1]).unwrap();
    assert!(matches!(close.check_clearance(0.1), Err(MonoError::Clearance { .. })));
}

#[test]
fn config_points() {
    assert!(matches!(ConfigPoint::z(vec![re(1.0), re(1.0)]), Err(MonoError::Coincident(1, 2))));
    assert!(ConfigPoint::z(vec![re(0.0)]).is_err());
    let two_pi_i = c64(0.0, 2.0 * std::f64::consts::PI);
    assert!(ConfigPoint::u(vec![re(0.3), re(0.3) + two_pi_i]).is_err());
    let p = ConfigPoint::u(vec![re(0.0), c64(2f64.ln(), 0.5)]).unwrap();
    let z = p.to_z();
    assert!((z.coords()[1] - Complex64::from_polar(2.0, 0.5)).norm() < 1e-15);
    assert!((z.to_u().coords()[1] - p.coords()[1]).norm() < 1e-15);
    assert!((p.ratio(1, 0) - z.ratio(1, 0)).norm() < 1e-15);
    assert_eq!(ConfigPoint::base(3).coords(), &[re(1.0), re(2.0), re(3.0)]);
}

#[test]
fn braid_word_syntax() {
    let w: BraidWord = "b1 b2' X1 X3^-1".parse().unwrap();
    assert_eq!(
        w.letters(),
        &[(Generator::B(1), 1), (Generator::B(2), -1), (Generator::X(1), 1), (Generator::X(3), -1)]
    );
    assert_eq!(w.to_string(), "b1 b2' X1 X3'");
    assert!(w.check(3).is_ok());
    assert!(w.check(2).is_err());
    assert_eq!(w.inverse().to_string(), "X3 X1' b2 b1'");
    assert!(w.concat(&w.inverse()).reduced().is_empty());
    assert!("b1 q2".parse::<BraidWord>().is_err());
    assert!("1".parse::<BraidWord>().unwrap().is_empty());
    assert_eq!(BraidWord::empty().to_string(), "1");
}
