use bialgebra::*;
use supercore::{c64, koszul_flip, CMat, Complex64, GradedMatrix, PureTensor, Scalar};

fn c(x: f64) -> Complex64 {
    c64(x, 0.0)
}

fn vector(spec: &AlgebraSpec) -> &Representation {
    spec.rep("vector").unwrap()
}

#[test]
fn builtins_pass_every_axiom_tightly() {
    for name in BUILTIN_NAMES {
        let spec = builtin_algebra(name).unwrap();
        let report = validate_spec(&spec, 1e-14).unwrap();
        assert!(report.passed(), "{name}: {}", report.summary());
        assert!(report.max_residual() < 1e-14);
    }
}

#[test]
fn builtin_dimensions_and_parities() {
    let sl2 = builtin_algebra("sl2").unwrap();
    assert_eq!(sl2.dim(), 3);
    assert!(sl2.basis.iter().all(|b| b.parity == 0));
    let gl11 = builtin_algebra("gl11").unwrap();
    assert_eq!(gl11.dim(), 4);
    assert_eq!(gl11.basis.iter().filter(|b| b.parity == 1).count(), 2);
    assert!(matches!(builtin_algebra("e8"), Err(SpecError::UnknownAlgebra(_))));
}

#[test]
fn sl2_r_matrix_in_vector_rep() {
    let spec = builtin_algebra("sl2").unwrap();
    let rep = vector(&spec);
    let r = classical_r(&spec, rep, rep).unwrap();
    let mut want = CMat::from_diagonal(&nalgebra::DVector::from_vec(vec![c(0.25), c(-0.25), c(-0.25), c(0.25)]));
    want[(1, 2)] = c(1.0);
    assert!((r.matrix.complex().unwrap() - want).norm() < 1e-15);
    assert!(cybe_residual(&r.terms, &rep.space).unwrap() < 1e-14);
}

#[test]
fn gl11_r_matrix_has_signed_odd_term() {
    let spec = builtin_algebra("gl11").unwrap();
    let rep = vector(&spec);
    let r = classical_r(&spec, rep, rep).unwrap();
    // e⊗f acts on v1⊗v0 through (-1)^{|f||v1|}: -v0⊗v1; k⊗n = I⊗diag(-1/2, 1/2)
    let mut want = CMat::from_diagonal(&nalgebra::DVector::from_vec(vec![c(-0.5), c(0.5), c(-0.5), c(0.5)]));
    want[(1, 2)] = c(-1.0);
    assert!((r.matrix.complex().unwrap() - want).norm() < 1e-15);
    assert!(r.terms.iter().any(|t| t.parities() == Some((1, 1))));
    assert!(cybe_residual(&r.terms, &rep.space).unwrap() < 1e-14);
}

#[test]
fn abelian_example() {
    let spec = abelian_pair();
    assert!(validate_spec(&spec, 1e-14).unwrap().passed());
    let rep = spec.rep("zero").unwrap();
    let r = classical_r(&spec, rep, rep).unwrap();
    assert_eq!(r.abstract_terms, vec![BasisTensor { coeff: 1.0, left: 0, right: 1 }]);
    assert_eq!(cybe_residual(&r.terms, &rep.space).unwrap(), 0.0);
    assert_eq!(rho_r_in_rep(&spec, rep).unwrap().max_abs(), 0.0);
    assert_eq!(cybe_residual(&[], &rep.space).unwrap(), 0.0);
}

#[test]
fn dropping_the_cartan_part_breaks_cybe() {
    let spec = builtin_algebra("sl2").unwrap();
    let rep = vector(&spec);
    let ef = vec![PureTensor::new(Scalar::one(), rep.image(0).clone(), rep.image(2).clone())];
    assert!(cybe_residual(&ef, &rep.space).unwrap() > 0.1);
}

#[test]
fn rho_r_values() {
    let spec = builtin_algebra("sl2").unwrap();
    let rho = rho_r_in_rep(&spec, vector(&spec)).unwrap();
    let e = rho.complex().unwrap();
    assert!((e[(0, 0)] - c(1.25)).norm() < 1e-15 && (e[(1, 1)] - c(0.25)).norm() < 1e-15);
    assert!(e[(0, 1)].norm() == 0.0 && e[(1, 0)].norm() == 0.0);

    let gl = builtin_algebra("gl11").unwrap();
    let rho = rho_r_in_rep(&gl, vector(&gl)).unwrap();
    // E12 E21 + I diag(-1/2, 1/2) = diag(1/2, 1/2)
    let id_half = GradedMatrix::identity(&vector(&gl).space, supercore::Mode::Complex).scale_complex(c(0.5));
    assert!(rho.distance(&id_half).unwrap() < 1e-15);
}

#[test]
fn casimir_symmetry_and_invariance() {
    for name in BUILTIN_NAMES {
        let spec = builtin_algebra(name).unwrap();
        let rep = vector(&spec);
        let omega = casimir_in_rep(&spec, rep, rep).unwrap();
        assert!(flip_conjugate(&omega, &rep.space).unwrap().distance(&omega).unwrap() < 1e-15);
        for i in 0..spec.dim() {
            let d = diagonal_action(rep.image(i), &rep.space).unwrap();
            assert!(omega.commutator(&d).unwrap().max_abs() < 1e-12, "{name} basis {i}");
        }
    }
    let spec = builtin_algebra("sl2").unwrap();
    let rep = vector(&spec);
    let omega = casimir_in_rep(&spec, rep, rep).unwrap();
    let mut want = CMat::from_diagonal(&nalgebra::DVector::from_vec(vec![c(0.5), c(-0.5), c(-0.5), c(0.5)]));
    want[(1, 2)] = c(1.0);
    want[(2, 1)] = c(1.0);
    assert!((omega.complex().unwrap() - want).norm() < 1e-15);
    let r = classical_r(&spec, rep, rep).unwrap().matrix;
    let f = koszul_flip(&rep.space, &rep.space);
    assert!((&r + &(&(&f * &r) * &f)).distance(&omega).unwrap() < 1e-15);
}

#[test]
fn s_compatibility() {
    let spec = builtin_algebra("sl2").unwrap();
    let rep = vector(&spec);
    let r = classical_r(&spec, rep, rep).unwrap();
    assert!(check_s_compatible(rep.image(1), &r.terms, &rep.space).unwrap() < 1e-14);
    let zero = GradedMatrix::zeros(&rep.space, &rep.space, supercore::Mode::Complex);
    assert_eq!(check_s_compatible(&zero, &r.terms, &rep.space).unwrap(), 0.0);
    // [Δe, r] = ½(e⊗h − h⊗e), whose largest entry is ½
    let bad = check_s_compatible(rep.image(0), &r.terms, &rep.space).unwrap();
    assert!((bad - 0.5).abs() < 1e-15, "{bad}");

    let gl = builtin_algebra("gl11").unwrap();
    let grep = vector(&gl);
    let gr = classical_r(&gl, grep, grep).unwrap();
    for a in 0..2 {
        assert!(check_s_compatible(grep.image(a), &gr.terms, &grep.space).unwrap() < 1e-14);
    }
    assert!(matches!(check_s_compatible(grep.image(2), &gr.terms, &grep.space), Err(SpecError::OddOperator)));
}

#[test]
fn representations_are_homomorphisms() {
    for name in BUILTIN_NAMES {
        let spec = builtin_algebra(name).unwrap();
        let report = validate_spec(&spec, 1e-14).unwrap();
        let hom = report.check("rep_homomorphism:vector").unwrap();
        assert!(hom.residual < 1e-14);
    }
}

#[test]
fn isotropy_violation_is_reported() {
    let mut spec = builtin_algebra("sl2").unwrap();
    spec.form[0][0] = 1.0;
    let report = validate_spec(&spec, 1e-14).unwrap();
    assert!(!report.check("isotropy").unwrap().passed);
    assert_eq!(report.check("isotropy").unwrap().worst.as_deref(), Some("(e, e)"));
}

#[test]
fn perturbed_structure_constant_breaks_jacobi() {
    // [k, n] = 0.1 e gives J(k, n, f) = 0.1 [e, f] = 0.1 k
    let mut spec = builtin_algebra("gl11").unwrap();
    spec.set_bracket(0, 1, 2, 0.1);
    let report = validate_spec(&spec, 1e-14).unwrap();
    let jac = report.check("jacobi").unwrap();
    assert!(!jac.passed && (jac.residual - 0.1).abs() < 1e-15, "{jac:?}");
}

#[test]
fn three_dimensional_perturbation_keeps_jacobi_but_breaks_invariance() {
    // J(e, h, f) = -2h + 0 + 2h for [e, h] = -2e + 0.1 f
    let mut spec = builtin_algebra("sl2").unwrap();
    spec.set_bracket(0, 1, 2, 0.1);
    let report = validate_spec(&spec, 1e-14).unwrap();
    assert_eq!(report.check("jacobi").unwrap().residual, 0.0);
    assert!(!report.check("form_invariance").unwrap().passed);
}

#[test]
fn overlapping_polarization_is_rejected() {
    let mut spec = builtin_algebra("sl2").unwrap();
    spec.minus.push(0);
    assert!(matches!(r_abstract(&spec), Err(SpecError::Polarization(_))));
    assert!(!validate_spec(&spec, 1e-14).unwrap().check("polarization").unwrap().passed);
}

#[test]
fn cartan_element_combines_generators() {
    let spec = builtin_algebra("gl11").unwrap();
    let rep = vector(&spec);
    let s = spec.cartan_element(rep, &[0.0, 2.0]).unwrap();
    assert!(s.distance(&rep.image(1).scale_complex(c(2.0))).unwrap() < 1e-15);
    assert!(matches!(spec.cartan_element(rep, &[1.0]), Err(SpecError::Schema(_))));
}
