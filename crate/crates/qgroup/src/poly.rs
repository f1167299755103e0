use std::collections::BTreeMap;

use supercore::{place_single, GradedMatrix, Mode, Scalar, SuperSpace};

use crate::error::Result;

/// A Cartan variable `H_a^{(leg)}`: `(leg, a)`, both 0-based.
pub type Var = (usize, usize);

/// `Σ c_v v + constant`, the image of a variable under a substitution.
#[derive(Clone, Debug, Default)]
pub struct Affine {
    pub terms: Vec<(Var, Scalar)>,
    pub constant: Scalar,
}

impl Affine {
    pub fn var(v: Var) -> Self {
        Affine { terms: vec![(v, Scalar::one())], constant: Scalar::zero() }
    }

    pub fn zero() -> Self {
        Affine::default()
    }
}

/// Polynomial of degree at most two in commuting Cartan variables.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct CartanPoly {
    pub constant: Scalar,
    pub linear: BTreeMap<Var, Scalar>,
    /// Keys are ordered pairs `(v, w)` with `v <= w`.
    pub quadratic: BTreeMap<(Var, Var), Scalar>,
}

fn bump<K: Ord>(map: &mut BTreeMap<K, Scalar>, k: K, c: &Scalar) {
    let e = map.entry(k).or_insert_with(Scalar::zero);
    *e = &*e + c;
}

fn prune<K: Ord>(map: &mut BTreeMap<K, Scalar>) {
    map.retain(|_, c| !c.is_zero());
}

impl CartanPoly {
    pub fn zero() -> Self {
        CartanPoly::default()
    }

    /// `c·H_a` on leg 0.
    pub fn linear(a: usize, c: Scalar) -> Self {
        let mut p = CartanPoly::zero();
        p.add_linear((0, a), &c);
        p
    }

    pub fn add_linear(&mut self, v: Var, c: &Scalar) {
        bump(&mut self.linear, v, c);
        prune(&mut self.linear);
    }

    pub fn add_quadratic(&mut self, v: Var, w: Var, c: &Scalar) {
        let key = if v <= w { (v, w) } else { (w, v) };
        bump(&mut self.quadratic, key, c);
        prune(&mut self.quadratic);
    }

    pub fn is_zero(&self) -> bool {
        self.constant.is_zero() && self.linear.is_empty() && self.quadratic.is_empty()
    }

    pub fn is_linear(&self) -> bool {
        self.quadratic.is_empty()
    }

    pub fn mode(&self) -> Mode {
        let m = self.constant.mode();
        self.linear.values().chain(self.quadratic.values()).fold(m, |m, c| m.combine(c.mode()).unwrap_or(m))
    }

    /// `self + sign·other`.
    pub fn combine(&self, other: &CartanPoly, sign: f64) -> CartanPoly {
        let s = Scalar::from(sign);
        let mut out = self.clone();
        out.constant = &out.constant + &(&other.constant * &s);
        for (v, c) in &other.linear {
            bump(&mut out.linear, *v, &(c * &s));
        }
        for (k, c) in &other.quadratic {
            bump(&mut out.quadratic, *k, &(c * &s));
        }
        prune(&mut out.linear);
        prune(&mut out.quadratic);
        out
    }

    pub fn scaled(&self, c: &Scalar) -> CartanPoly {
        CartanPoly {
            constant: &self.constant * c,
            linear: self.linear.iter().map(|(v, x)| (*v, x * c)).collect(),
            quadratic: self.quadratic.iter().map(|(k, x)| (*k, x * c)).collect(),
        }
    }

    /// Replaces every variable by an affine form.
    pub fn substitute(&self, f: &dyn Fn(Var) -> Affine) -> CartanPoly {
        let mut out = CartanPoly { constant: self.constant.clone(), ..CartanPoly::zero() };
        for (v, c) in &self.linear {
            let a = f(*v);
            out.constant = &out.constant + &(c * &a.constant);
            for (w, d) in &a.terms {
                bump(&mut out.linear, *w, &(c * d));
            }
        }
        for ((v, w), c) in &self.quadratic {
            let (a, b) = (f(*v), f(*w));
            out.constant = &out.constant + &(&(c * &a.constant) * &b.constant);
            for (x, d) in &a.terms {
                bump(&mut out.linear, *x, &(&(c * d) * &b.constant));
            }
            for (y, e) in &b.terms {
                bump(&mut out.linear, *y, &(&(c * e) * &a.constant));
            }
            for (x, d) in &a.terms {
                for (y, e) in &b.terms {
                    let key = if x <= y { (*x, *y) } else { (*y, *x) };
                    bump(&mut out.quadratic, key, &(&(c * d) * e));
                }
            }
        }
        prune(&mut out.linear);
        prune(&mut out.quadratic);
        out
    }

    /// Relabels legs; variables whose leg maps to `None` are set to zero.
    pub fn relabel(&self, f: &dyn Fn(usize) -> Option<usize>) -> CartanPoly {
        self.substitute(&|(leg, a)| match f(leg) {
            Some(l) => Affine::var((l, a)),
            None => Affine::zero(),
        })
    }

    /// Splits a polynomial of degree at most one into its constant and one
    /// single-leg (leg 0) linear polynomial per leg.
    pub fn split_linear(&self, legs: usize) -> (Scalar, Vec<CartanPoly>) {
        debug_assert!(self.quadratic.is_empty());
        let mut per_leg = vec![CartanPoly::zero(); legs];
        for ((leg, a), c) in &self.linear {
            per_leg[*leg].add_linear((0, *a), c);
        }
        (self.constant.clone(), per_leg)
    }

    /// Value with every variable set to zero.
    pub fn at_zero(&self) -> Scalar {
        self.constant.clone()
    }

    /// The operator `p(ρ(H))` on `⊗ spaces`, where `cartan[leg][a]` is
    /// `ρ(H_a)` on that leg.
    pub fn operator(&self, cartan: &[&[GradedMatrix]], spaces: &[SuperSpace]) -> Result<GradedMatrix> {
        let total = SuperSpace::tensor_all(spaces)?;
        let mut out = GradedMatrix::identity(&total, Mode::Complex).scale(&self.constant)?;
        let placed = |(leg, a): Var| place_single(&cartan[leg][a], leg + 1, spaces);
        for (v, c) in &self.linear {
            out = out.try_add(&placed(*v)?.scale(c)?)?;
        }
        for ((v, w), c) in &self.quadratic {
            out = out.try_add(&placed(*v)?.try_compose(&placed(*w)?)?.scale(c)?)?;
        }
        Ok(out)
    }
}
