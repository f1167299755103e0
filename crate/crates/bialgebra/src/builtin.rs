use supercore::{c64, CMat, Complex64, SuperSpace};

use crate::error::{Result, SpecError};
use crate::spec::{AlgebraSpec, BasisElement, Representation};

/// Names accepted by [`builtin_algebra`].
pub const BUILTIN_NAMES: [&str; 2] = ["sl2", "gl11"];

fn basis(items: &[(&str, u8)]) -> Vec<BasisElement> {
    items.iter().map(|(l, p)| BasisElement { label: l.to_string(), parity: *p }).collect()
}

fn mat2(a: [[f64; 2]; 2]) -> CMat {
    CMat::from_fn(2, 2, |i, j| c64(a[i][j], 0.0))
}

fn labelled(labels: &[&str], parities: &[u8]) -> SuperSpace {
    SuperSpace::new(labels.iter().map(|s| s.to_string()).collect(), parities.to_vec()).expect("static space")
}

/// sl(2) with basis (e, h, f), `<e,f> = 1`, `<h,h> = 2`; `e`, `f` are dual
/// across the polarization and `h` is a shared Cartan element, giving
/// `r = e⊗f + ¼ h⊗h`.
fn sl2() -> AlgebraSpec {
    let form = vec![vec![0.0, 0.0, 1.0], vec![0.0, 2.0, 0.0], vec![1.0, 0.0, 0.0]];
    let mut s = AlgebraSpec::new("sl2", basis(&[("e", 0), ("h", 0), ("f", 0)]), form);
    s.set_bracket(0, 1, 0, -2.0);
    s.set_bracket(0, 2, 1, 1.0);
    s.set_bracket(1, 2, 2, -2.0);
    s.plus = vec![0];
    s.minus = vec![2];
    s.dual_pairing = vec![(0, 2)];
    s.cartan = vec![1];
    let space = labelled(&["v1", "v2"], &[0, 0]);
    let rep = Representation::new(
        "vector",
        space,
        vec![mat2([[0.0, 1.0], [0.0, 0.0]]), mat2([[1.0, 0.0], [0.0, -1.0]]), mat2([[0.0, 0.0], [1.0, 0.0]])],
    )
    .expect("static rep");
    s.add_rep(rep);
    s
}

/// gl(1|1) with basis (k, n, e, f): `k = E11 + E22` central, `n = (E22 - E11)/2`,
/// odd `e = E12`, `f = E21`, and form `B(x, y) = -str(xy)`. Polarization
/// `plus = {e, k}`, `minus = {f, n}` gives `r = e⊗f + k⊗n`.
fn gl11() -> AlgebraSpec {
    let form = vec![
        vec![0.0, 1.0, 0.0, 0.0],
        vec![1.0, 0.0, 0.0, 0.0],
        vec![0.0, 0.0, 0.0, -1.0],
        vec![0.0, 0.0, 1.0, 0.0],
    ];
    let mut s = AlgebraSpec::new("gl11", basis(&[("k", 0), ("n", 0), ("e", 1), ("f", 1)]), form);
    s.set_bracket(1, 2, 2, -1.0);
    s.set_bracket(1, 3, 3, 1.0);
    s.set_bracket(2, 3, 0, 1.0);
    s.plus = vec![2, 0];
    s.minus = vec![3, 1];
    s.dual_pairing = vec![(2, 3), (0, 1)];
    s.cartan = vec![0, 1];
    let space = labelled(&["v0", "v1"], &[0, 1]);
    let rep = Representation::new(
        "vector",
        space,
        vec![
            mat2([[1.0, 0.0], [0.0, 1.0]]),
            mat2([[-0.5, 0.0], [0.0, 0.5]]),
            mat2([[0.0, 1.0], [0.0, 0.0]]),
            mat2([[0.0, 0.0], [1.0, 0.0]]),
        ],
    )
    .expect("static rep");
    s.add_rep(rep);
    s
}

/// A built-in algebra with its vector representation.
pub fn builtin_algebra(name: &str) -> Result<AlgebraSpec> {
    match name {
        "sl2" => Ok(sl2()),
        "gl11" => Ok(gl11()),
        other => Err(SpecError::UnknownAlgebra(other.to_string())),
    }
}

/// Two-dimensional abelian algebra with `<g1, g2> = 1`, `plus = {g1}`,
/// `minus = {g2}`, and a representation sending both generators to zero.
pub fn abelian_pair() -> AlgebraSpec {
    let form = vec![vec![0.0, 1.0], vec![1.0, 0.0]];
    let mut s = AlgebraSpec::new("abelian", basis(&[("g1", 0), ("g2", 0)]), form);
    s.plus = vec![0];
    s.minus = vec![1];
    s.dual_pairing = vec![(0, 1)];
    let space = SuperSpace::from_parities(&[0]).expect("static space");
    let zero = CMat::from_element(1, 1, Complex64::new(0.0, 0.0));
    s.add_rep(Representation::new("zero", space, vec![zero.clone(), zero]).expect("static rep"));
    s
}
