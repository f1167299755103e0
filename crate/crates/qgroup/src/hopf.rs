use bialgebra::Representation;
use supercore::{matrix_exp, GradedMatrix, Mode, Scalar, SuperSpace};

use crate::error::{QError, Result};
use crate::poly::CartanPoly;

/// A letter of a monomial: a generator or the exponential of a single-leg
/// Cartan polynomial (variables on leg 0).
#[derive(Clone, Debug, PartialEq)]
pub enum Factor {
    Gen(usize),
    Cartan(CartanPoly),
}

pub type Word = Vec<Factor>;

/// A non-Cartan generator with `[H_a, X] = weight[a]·X`.
#[derive(Clone, Debug, PartialEq)]
pub struct GenInfo {
    pub label: String,
    pub parity: u8,
    pub weight: Vec<f64>,
    pub nilpotent: bool,
    /// Index of the corresponding basis element of the algebra spec.
    pub basis: usize,
}

/// One summand `coeff · left ⊗ right` of a coproduct.
#[derive(Clone, Debug, PartialEq)]
pub struct CoproductTerm {
    pub coeff: Scalar,
    pub left: Word,
    pub right: Word,
}

/// Generators, Cartan part and Hopf tables of a built-in quantum group at a
/// fixed value (or formal series) of `h`. Cartan elements are primitive and
/// their exponentials grouplike.
#[derive(Clone, Debug)]
pub struct HopfPresentation {
    pub name: String,
    pub h: Scalar,
    pub cartan_labels: Vec<String>,
    /// Basis indices of the Cartan generators in the algebra spec.
    pub cartan_basis: Vec<usize>,
    pub gens: Vec<GenInfo>,
    pub coproduct: Vec<Option<Vec<CoproductTerm>>>,
    pub antipode: Vec<Option<(Scalar, Word)>>,
    pub counit: Vec<Scalar>,
}

fn cexp(a: usize, c: Scalar) -> Factor {
    Factor::Cartan(CartanPoly::linear(a, c))
}

fn term(coeff: Scalar, left: Word, right: Word) -> CoproductTerm {
    CoproductTerm { coeff, left, right }
}

impl HopfPresentation {
    /// `sl2` (q = e^{h/2}, K = q^H) or `gl11`.
    pub fn builtin(name: &str, h: &Scalar) -> Result<Self> {
        let one = Scalar::one;
        let minus = || Scalar::from(-1.0);
        let half = h.scale(supercore::c64(0.5, 0.0));
        match name {
            "sl2" => {
                let k = || cexp(0, half.clone());
                let kinv = || cexp(0, -&half);
                Ok(HopfPresentation {
                    name: name.into(),
                    h: h.clone(),
                    cartan_labels: vec!["H".into()],
                    cartan_basis: vec![1],
                    gens: vec![
                        GenInfo { label: "E".into(), parity: 0, weight: vec![2.0], nilpotent: true, basis: 0 },
                        GenInfo { label: "F".into(), parity: 0, weight: vec![-2.0], nilpotent: true, basis: 2 },
                    ],
                    coproduct: vec![
                        Some(vec![term(one(), vec![Factor::Gen(0)], vec![k()]), term(one(), vec![], vec![Factor::Gen(0)])]),
                        Some(vec![
                            term(one(), vec![Factor::Gen(1)], vec![]),
                            term(one(), vec![kinv()], vec![Factor::Gen(1)]),
                        ]),
                    ],
                    antipode: vec![Some((minus(), vec![Factor::Gen(0), kinv()])), Some((minus(), vec![k(), Factor::Gen(1)]))],
                    counit: vec![Scalar::zero(), Scalar::zero()],
                })
            }
            "gl11" => {
                let ek = || cexp(0, h.clone());
                let ekinv = || cexp(0, -h);
                Ok(HopfPresentation {
                    name: name.into(),
                    h: h.clone(),
                    cartan_labels: vec!["k".into(), "n".into()],
                    cartan_basis: vec![0, 1],
                    gens: vec![
                        GenInfo { label: "E".into(), parity: 1, weight: vec![0.0, -1.0], nilpotent: true, basis: 2 },
                        GenInfo { label: "F".into(), parity: 1, weight: vec![0.0, 1.0], nilpotent: true, basis: 3 },
                    ],
                    coproduct: vec![
                        Some(vec![term(one(), vec![Factor::Gen(0)], vec![]), term(one(), vec![ek()], vec![Factor::Gen(0)])]),
                        Some(vec![term(one(), vec![Factor::Gen(1)], vec![]), term(one(), vec![], vec![Factor::Gen(1)])]),
                    ],
                    antipode: vec![Some((minus(), vec![ekinv(), Factor::Gen(0)])), Some((minus(), vec![Factor::Gen(1)]))],
                    counit: vec![Scalar::zero(), Scalar::zero()],
                })
            }
            other => Err(QError::UnknownAlgebra(other.into())),
        }
    }

    pub fn mode(&self) -> Mode {
        self.h.mode()
    }

    pub fn gen_index(&self, label: &str) -> Option<usize> {
        self.gens.iter().position(|g| g.label == label)
    }

    pub fn factor_parity(&self, f: &Factor) -> u8 {
        match f {
            Factor::Gen(g) => self.gens[*g].parity,
            Factor::Cartan(_) => 0,
        }
    }

    pub fn word_parity(&self, w: &[Factor]) -> u8 {
        w.iter().map(|f| self.factor_parity(f)).sum::<u8>() % 2
    }

    pub fn word_weight(&self, w: &[Factor]) -> Vec<f64> {
        let mut out = vec![0.0; self.cartan_labels.len()];
        for f in w {
            if let Factor::Gen(g) = f {
                for (o, b) in out.iter_mut().zip(&self.gens[*g].weight) {
                    *o += b;
                }
            }
        }
        out
    }

    /// Images of the Cartan and non-Cartan generators in a representation.
    pub fn rep_images(&self, rep: &Representation) -> Result<HopfRep> {
        Ok(HopfRep {
            space: rep.space.clone(),
            cartan: self.cartan_basis.iter().map(|&i| rep.image(i).clone()).collect(),
            gens: self.gens.iter().map(|g| rep.image(g.basis).clone()).collect(),
        })
    }
}

/// Generator images used to evaluate expressions on one leg.
#[derive(Clone, Debug)]
pub struct HopfRep {
    pub space: SuperSpace,
    pub cartan: Vec<GradedMatrix>,
    pub gens: Vec<GradedMatrix>,
}

impl HopfRep {
    pub fn factor(&self, f: &Factor) -> Result<GradedMatrix> {
        match f {
            Factor::Gen(g) => Ok(self.gens[*g].clone()),
            Factor::Cartan(p) => Ok(matrix_exp(&p.operator(&[&self.cartan], std::slice::from_ref(&self.space))?)?),
        }
    }

    pub fn word(&self, w: &[Factor]) -> Result<GradedMatrix> {
        let mut out = GradedMatrix::identity(&self.space, Mode::Complex);
        for f in w {
            out = out.try_compose(&self.factor(f)?)?;
        }
        Ok(out)
    }

    /// Checks `ρ(g)^{k+1} = 0` for every nilpotent generator.
    pub fn check_nilpotent(&self, hopf: &HopfPresentation, k: usize) -> Result<()> {
        for (g, info) in hopf.gens.iter().enumerate() {
            if !info.nilpotent {
                continue;
            }
            let norm = self.gens[g].pow(k as u32 + 1)?.max_abs();
            if norm != 0.0 {
                return Err(QError::Nilpotency { gen: info.label.clone(), power: k + 1, norm });
            }
        }
        Ok(())
    }
}
