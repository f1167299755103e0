use bialgebra::{builtin_algebra, AlgebraSpec, Representation};
use monodromy::{monodromy_rep, BraidWord, Generator, Provenance, TransportParams, WordEvaluator};
use qgroup::*;
use supercore::{c64, decompose_pair, koszul_flip, matrix_exp, place_pair, place_single, GradedMatrix, Mode, Scalar};

fn s_coeffs(name: &str) -> Vec<f64> {
    match name {
        "sl2" => vec![0.7],
        _ => vec![0.4, -0.9],
    }
}

fn setup(name: &str, h: f64) -> (HopfPresentation, AlgebraSpec, Representation) {
    let spec = builtin_algebra(name).unwrap();
    let rep = spec.rep("vector").unwrap().clone();
    let hopf = HopfPresentation::builtin(name, &Scalar::from(h)).unwrap();
    (hopf, spec, rep)
}

fn rep_for(name: &str, n: usize, h: f64, convention: Convention) -> WordEvaluator {
    let (hopf, spec, rep) = setup(name, h);
    algebraic_rep(&hopf, &spec, &rep, n, &s_coeffs(name), convention).unwrap()
}

fn relation(ev: &WordEvaluator, a: &str, b: &str) -> f64 {
    let a: BraidWord = a.parse().unwrap();
    let b: BraidWord = b.parse().unwrap();
    ev.eval(&a).unwrap().distance(&ev.eval(&b).unwrap()).unwrap()
}

fn exp_hs(name: &str, h: f64) -> GradedMatrix {
    let (_, spec, rep) = setup(name, h);
    let s = spec.cartan_element(&rep, &s_coeffs(name)).unwrap();
    matrix_exp(&s.scale_complex(c64(h, 0.0))).unwrap()
}

#[test]
fn one_strand_is_exp_hs() {
    for name in ["sl2", "gl11"] {
        for convention in [Convention::Corrected, Convention::Literal] {
            let ev = rep_for(name, 1, 0.2, convention);
            let x = ev.generator(Generator::X(1)).unwrap();
            assert!(x.distance(&exp_hs(name, 0.2)).unwrap() < 1e-12, "{name} {convention:?}");
            assert_eq!(ev.provenance(), Provenance::Algebraic);
        }
    }
}

#[test]
fn zero_coupling_gives_flips() {
    for name in ["sl2", "gl11"] {
        let (_, _, rep) = setup(name, 0.0);
        let ev = rep_for(name, 3, 0.0, Convention::Corrected);
        let spaces = vec![rep.space.clone(); 3];
        let sigma = koszul_flip(&rep.space, &rep.space);
        for i in 1..3 {
            let want = supercore::embed(&sigma, i, 2, &spaces).unwrap();
            assert!(ev.generator(Generator::B(i)).unwrap().distance(&want).unwrap() == 0.0);
        }
        for j in 1..=3 {
            let x = ev.generator(Generator::X(j)).unwrap();
            assert!(x.distance(&GradedMatrix::identity(ev.space(), Mode::Complex)).unwrap() == 0.0);
        }
    }
}

#[test]
fn relations_hold_to_rounding() {
    let checks = [
        ("b1 b2 b1", "b2 b1 b2"),
        ("X1 X2", "X2 X1"),
        ("X1 X3", "X3 X1"),
        ("X2 X3", "X3 X2"),
        ("b1 X1", "X2 b1'"),
        ("b2 X2", "X3 b2'"),
        ("b1 X3", "X3 b1"),
        ("b2 X1", "X1 b2"),
    ];
    for name in ["sl2", "gl11"] {
        let ev = rep_for(name, 3, 0.2, Convention::Corrected);
        ev.warm().unwrap();
        for (a, b) in checks {
            let r = relation(&ev, a, b);
            assert!(r < 1e-11, "{name}: {a} = {b}: {r}");
        }
    }
    let ev = rep_for("sl2", 4, 0.2, Convention::Corrected);
    assert!(relation(&ev, "b1 b3", "b3 b1") < 1e-11);
    assert!(relation(&ev, "X1 X4", "X4 X1") < 1e-11);
}

#[test]
fn literal_ordering_breaks_commutation() {
    let ev = rep_for("sl2", 2, 0.2, Convention::Literal);
    let r = relation(&ev, "X1 X2", "X2 X1");
    assert!(r > 1e-3, "{r}");
}

/// `X_1 = (R_1n ⋯ R_12)^{-1} e^{hs^{(1)}}` from placed R-matrices.
#[test]
fn x1_matches_r_matrix_product() {
    for name in ["sl2", "gl11"] {
        let (hopf, _, rep) = setup(name, 0.2);
        let hrep = hopf.rep_images(&rep).unwrap();
        let r = eval_universal(&hopf, &universal_r_for(&hopf, &hrep).unwrap(), &hrep).unwrap();
        let pieces = decompose_pair(&r, &rep.space, &rep.space).unwrap();
        for n in 1..=3 {
            let spaces = vec![rep.space.clone(); n];
            let mut prod = GradedMatrix::identity(&supercore::SuperSpace::tensor_all(&spaces).unwrap(), Mode::Complex);
            for j in (2..=n).rev() {
                prod = prod.try_compose(&place_pair(&pieces, 1, j, &spaces).unwrap()).unwrap();
            }
            let want = prod.inverse().unwrap().try_compose(&place_single(&exp_hs(name, 0.2), 1, &spaces).unwrap()).unwrap();
            let ev = rep_for(name, n, 0.2, Convention::Corrected);
            let res = ev.generator(Generator::X(1)).unwrap().distance(&want).unwrap();
            assert!(res < 1e-12, "{name} n = {n}: {res}");
        }
    }
}

#[test]
fn drinfeld_jimbo_form_of_x1() {
    for name in ["sl2", "gl11"] {
        let h = 0.2;
        let (hopf, spec, rep) = setup(name, h);
        let hrep = hopf.rep_images(&rep).unwrap();
        let u = drinfeld_u(&hopf, &hrep).unwrap();
        let spaces = vec![rep.space.clone(); 2];
        let ehs = exp_hs(name, h);
        let uinv1 = place_single(&u.inverse().unwrap(), 1, &spaces).unwrap();
        let ehs1 = place_single(&ehs, 1, &spaces).unwrap();

        let lit = algebraic_source(&hopf, &spec, &rep, 2, &s_coeffs(name), Convention::Literal).unwrap();
        let c = drinfeld_c(&hopf, &hrep, 2, LegOrder::Leading).unwrap();
        let ag = ehs1.try_compose(&uinv1).unwrap().try_compose(&c).unwrap();
        assert!(lit.x()[0].distance(&ag).unwrap() < 1e-12, "{name} literal");

        let cor = algebraic_source(&hopf, &spec, &rep, 2, &s_coeffs(name), Convention::Corrected).unwrap();
        let c = drinfeld_c(&hopf, &hrep, 2, LegOrder::Trailing).unwrap();
        let ag = uinv1.try_compose(&c).unwrap().try_compose(&ehs1).unwrap();
        assert!(cor.x()[0].distance(&ag).unwrap() < 1e-12, "{name} corrected");
    }
}

#[test]
fn incompatible_s_is_rejected() {
    let (hopf, mut spec, rep) = setup("sl2", 0.2);
    // declare e as a Cartan direction so that s = e is expressible
    spec.cartan = vec![1, 0];
    assert!(matches!(
        algebraic_rep(&hopf, &spec, &rep, 2, &[0.0, 1.0], Convention::Corrected),
        Err(QError::Incompatible(r)) if (r - 0.5).abs() < 1e-15
    ));
    let (hopf, spec, rep) = setup("sl2", 0.2);
    assert!(algebraic_rep(&hopf, &spec, &rep, 0, &[0.7], Convention::Corrected).is_err());
    assert!(rep_for("sl2", 2, 0.2, Convention::Corrected).eval(&"b2".parse().unwrap()).is_err());
}

/// The two representations are isomorphic, not equal: compare traces of words.
#[test]
fn agrees_with_numeric_monodromy_on_traces() {
    let words = ["b1", "X1", "X2", "b1 X1", "X1 X2'", "b1 b1 X2", "b1' X1 X1", "X2 b1 X1'"];
    for name in ["sl2", "gl11"] {
        let h = 0.2;
        let (_, spec, rep) = setup(name, h);
        let s = spec.cartan_element(&rep, &s_coeffs(name)).unwrap();
        let numeric = monodromy_rep(2, c64(h, 0.0), &s, &spec, &rep, TransportParams::default()).unwrap();
        let algebraic = rep_for(name, 2, h, Convention::Corrected);
        for w in words {
            let w: BraidWord = w.parse().unwrap();
            let a = algebraic.eval(&w).unwrap().trace(false).unwrap().constant_term();
            let b = numeric.eval(&w).unwrap().trace(false).unwrap().constant_term();
            assert!((a - b).norm() < 1e-6, "{name} {w}: {a} vs {b}");
        }
    }
}
