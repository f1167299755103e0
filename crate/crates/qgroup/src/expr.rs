use supercore::{tensor_product_op, GradedMatrix, Mode, Scalar, SuperSpace};

use crate::error::{QError, Result};
use crate::hopf::{Factor, HopfPresentation, HopfRep, Word};
use crate::poly::{Affine, CartanPoly, Var};

/// Replacement terms produced for one input term.
type Rebuilt = Vec<(Scalar, Vec<Word>)>;

/// `coeff · w_1 ⊗ … ⊗ w_L`.
#[derive(Clone, Debug, PartialEq)]
pub struct Term {
    pub coeff: Scalar,
    pub words: Vec<Word>,
}

/// `exp(prefactor) · Σ terms` in `A^{⊗L}`. `truncation = Some(k)` records
/// that powers of nilpotent generators above `k` were dropped; evaluation
/// then requires `ρ(g)^{k+1} = 0`.
#[derive(Clone, Debug, PartialEq)]
pub struct UniversalExpr {
    pub legs: usize,
    pub prefactor: CartanPoly,
    pub terms: Vec<Term>,
    pub truncation: Option<usize>,
}

fn sign(p: u8) -> Scalar {
    Scalar::from(if p % 2 == 1 { -1.0 } else { 1.0 })
}

impl UniversalExpr {
    /// The unit `1 ⊗ … ⊗ 1`.
    pub fn unit(legs: usize) -> Self {
        UniversalExpr {
            legs,
            prefactor: CartanPoly::zero(),
            terms: vec![Term { coeff: Scalar::one(), words: vec![Vec::new(); legs] }],
            truncation: None,
        }
    }

    /// A single monomial on one leg.
    pub fn monomial(coeff: Scalar, word: Word) -> Self {
        UniversalExpr { legs: 1, prefactor: CartanPoly::zero(), terms: vec![Term { coeff, words: vec![word] }], truncation: None }
    }

    fn check_leg(&self, leg: usize) -> Result<()> {
        if leg >= self.legs {
            return Err(QError::LegOutOfRange { leg, legs: self.legs });
        }
        Ok(())
    }

    /// Splits `sub(β) = common + remainder` for each term, where `common` is
    /// the substitution at `β = 0` and the remainder has degree at most one;
    /// the remainder becomes a scalar and left Cartan factors on each leg.
    fn shifted(
        &self,
        new_legs: usize,
        sub: &dyn Fn(Var, &Term) -> Affine,
        zero_term: &Term,
        rebuild: &mut dyn FnMut(&Term) -> Result<Rebuilt>,
    ) -> Result<UniversalExpr> {
        let common = self.prefactor.substitute(&|v| sub(v, zero_term));
        let mut terms = Vec::new();
        for t in &self.terms {
            let rem = self.prefactor.substitute(&|v| sub(v, t)).combine(&common, -1.0);
            let (c0, per_leg) = rem.split_linear(new_legs);
            let scale = c0.exp();
            for (coeff, words) in rebuild(t)? {
                let words = words
                    .into_iter()
                    .zip(&per_leg)
                    .map(|(w, p)| {
                        if p.is_zero() {
                            w
                        } else {
                            std::iter::once(Factor::Cartan(p.clone())).chain(w).collect()
                        }
                    })
                    .collect();
                terms.push(Term { coeff: &coeff * &scale, words });
            }
        }
        Ok(UniversalExpr { legs: new_legs, prefactor: common, terms, truncation: self.truncation })
    }

    /// `(… ⊗ S ⊗ …)` on one leg (0-based).
    pub fn apply_antipode_leg(&self, hopf: &HopfPresentation, leg: usize) -> Result<UniversalExpr> {
        self.check_leg(leg)?;
        let zero = Term { coeff: Scalar::zero(), words: vec![Vec::new(); self.legs] };
        // S(f(H) w) = S(w) f(-H) = f(-H + β_w) S(w)
        let sub = |(l, a): Var, t: &Term| -> Affine {
            if l == leg {
                let beta = hopf.word_weight(&t.words[leg])[a];
                Affine { terms: vec![((l, a), Scalar::from(-1.0))], constant: Scalar::from(beta) }
            } else {
                Affine::var((l, a))
            }
        };
        let mut rebuild = |t: &Term| -> Result<Vec<(Scalar, Vec<Word>)>> {
            let w = &t.words[leg];
            let mut coeff = t.coeff.clone();
            // reversal sign Π_{i<j} (-1)^{|x_i||x_j|}
            let mut seen = 0u8;
            let mut sgn = 0u8;
            for f in w {
                let p = hopf.factor_parity(f);
                sgn += p * seen;
                seen += p;
            }
            coeff = &coeff * &sign(sgn);
            let mut out: Word = Vec::new();
            for f in w.iter().rev() {
                match f {
                    Factor::Gen(g) => {
                        let (c, img) = hopf.antipode[*g]
                            .as_ref()
                            .ok_or_else(|| QError::MissingAntipode(hopf.gens[*g].label.clone()))?;
                        coeff = &coeff * c;
                        out.extend(img.iter().cloned());
                    }
                    Factor::Cartan(p) => {
                        out.push(Factor::Cartan(p.substitute(&|v| Affine {
                            terms: vec![(v, Scalar::from(-1.0))],
                            constant: Scalar::zero(),
                        })));
                    }
                }
            }
            let mut words = t.words.clone();
            words[leg] = out;
            Ok(vec![(coeff, words)])
        };
        self.shifted(self.legs, &sub, &zero, &mut rebuild)
    }

    /// `Δ` on one leg: leg `leg` becomes legs `leg`, `leg + 1`.
    pub fn coproduct_leg(&self, hopf: &HopfPresentation, leg: usize) -> Result<UniversalExpr> {
        self.check_leg(leg)?;
        let prefactor = self.prefactor.substitute(&|(l, a)| {
            if l < leg {
                Affine::var((l, a))
            } else if l == leg {
                Affine { terms: vec![((l, a), Scalar::one()), ((l + 1, a), Scalar::one())], constant: Scalar::zero() }
            } else {
                Affine::var((l + 1, a))
            }
        });
        let mut terms = Vec::new();
        for t in &self.terms {
            // running products (coeff, left, right, |right|)
            let mut acc: Vec<(Scalar, Word, Word, u8)> = vec![(t.coeff.clone(), Vec::new(), Vec::new(), 0)];
            for f in &t.words[leg] {
                let pieces: Vec<(Scalar, Word, Word)> = match f {
                    Factor::Gen(g) => hopf.coproduct[*g]
                        .as_ref()
                        .ok_or_else(|| QError::MissingCoproduct(hopf.gens[*g].label.clone()))?
                        .iter()
                        .map(|c| (c.coeff.clone(), c.left.clone(), c.right.clone()))
                        .collect(),
                    Factor::Cartan(p) => {
                        if !p.is_linear() {
                            return Err(QError::QuadraticCoproduct);
                        }
                        let mut lin = p.clone();
                        let c0 = std::mem::replace(&mut lin.constant, Scalar::zero());
                        vec![(c0.exp(), vec![Factor::Cartan(lin.clone())], vec![Factor::Cartan(lin)])]
                    }
                };
                let mut next = Vec::with_capacity(acc.len() * pieces.len());
                for (c, l, r, pr) in &acc {
                    for (d, u, v) in &pieces {
                        // (l ⊗ r)(u ⊗ v) = (-1)^{|r||u|} lu ⊗ rv
                        let s = sign(pr * hopf.word_parity(u));
                        let mut l2 = l.clone();
                        l2.extend(u.iter().cloned());
                        let mut r2 = r.clone();
                        r2.extend(v.iter().cloned());
                        next.push((&(c * d) * &s, l2, r2, (pr + hopf.word_parity(v)) % 2));
                    }
                }
                acc = next;
            }
            for (c, l, r, _) in acc {
                if c.is_zero() {
                    continue;
                }
                let mut words = t.words[..leg].to_vec();
                words.push(l);
                words.push(r);
                words.extend(t.words[leg + 1..].iter().cloned());
                terms.push(Term { coeff: c, words });
            }
        }
        Ok(UniversalExpr { legs: self.legs + 1, prefactor, terms, truncation: self.truncation })
    }

    /// `Δ_n` on one leg: `n` consecutive legs replace it (`n = 1` is the identity).
    pub fn iterate_coproduct(&self, hopf: &HopfPresentation, leg: usize, n: usize) -> Result<UniversalExpr> {
        self.check_leg(leg)?;
        if n == 0 {
            return Err(QError::LegCount { expected: 1, found: 0 });
        }
        let mut out = self.clone();
        for _ in 1..n {
            out = out.coproduct_leg(hopf, leg)?;
        }
        Ok(out)
    }

    /// Multiplies legs `leg` and `leg + 1` into one leg.
    pub fn multiply_adjacent_legs(&self, hopf: &HopfPresentation, leg: usize) -> Result<UniversalExpr> {
        self.check_leg(leg + 1)?;
        let zero = Term { coeff: Scalar::zero(), words: vec![Vec::new(); self.legs] };
        // w_L g(H) = g(H - β_{w_L}) w_L
        let sub = |(l, a): Var, t: &Term| -> Affine {
            if l <= leg {
                Affine::var((l, a))
            } else if l == leg + 1 {
                let beta = hopf.word_weight(&t.words[leg])[a];
                Affine { terms: vec![((leg, a), Scalar::one())], constant: Scalar::from(-beta) }
            } else {
                Affine::var((l - 1, a))
            }
        };
        let mut rebuild = |t: &Term| -> Result<Vec<(Scalar, Vec<Word>)>> {
            let mut words = t.words[..leg].to_vec();
            let mut merged = t.words[leg].clone();
            merged.extend(t.words[leg + 1].iter().cloned());
            words.push(merged);
            words.extend(t.words[leg + 2..].iter().cloned());
            Ok(vec![(t.coeff.clone(), words)])
        };
        self.shifted(self.legs - 1, &sub, &zero, &mut rebuild)
    }

    /// `(… ⊗ ε ⊗ …)` on one leg.
    pub fn apply_counit_leg(&self, hopf: &HopfPresentation, leg: usize) -> Result<UniversalExpr> {
        self.check_leg(leg)?;
        let prefactor = self.prefactor.relabel(&|l| match l.cmp(&leg) {
            std::cmp::Ordering::Less => Some(l),
            std::cmp::Ordering::Equal => None,
            std::cmp::Ordering::Greater => Some(l - 1),
        });
        let mut terms = Vec::new();
        for t in &self.terms {
            let mut c = t.coeff.clone();
            for f in &t.words[leg] {
                c = &c
                    * &match f {
                        Factor::Gen(g) => hopf.counit[*g].clone(),
                        Factor::Cartan(p) => p.at_zero().exp(),
                    };
            }
            if c.is_zero() {
                continue;
            }
            let mut words = t.words.clone();
            words.remove(leg);
            terms.push(Term { coeff: c, words });
        }
        Ok(UniversalExpr { legs: self.legs - 1, prefactor, terms, truncation: self.truncation })
    }

    /// Exchanges legs `leg` and `leg + 1` with the Koszul sign.
    pub fn swap_legs(&self, hopf: &HopfPresentation, leg: usize) -> Result<UniversalExpr> {
        self.check_leg(leg + 1)?;
        let prefactor = self.prefactor.relabel(&|l| {
            Some(if l == leg {
                leg + 1
            } else if l == leg + 1 {
                leg
            } else {
                l
            })
        });
        let terms = self
            .terms
            .iter()
            .map(|t| {
                let s = sign(hopf.word_parity(&t.words[leg]) * hopf.word_parity(&t.words[leg + 1]));
                let mut words = t.words.clone();
                words.swap(leg, leg + 1);
                Term { coeff: &t.coeff * &s, words }
            })
            .collect();
        Ok(UniversalExpr { legs: self.legs, prefactor, terms, truncation: self.truncation })
    }
}

/// Evaluates an expression with the same representation on every leg.
pub fn eval_universal(hopf: &HopfPresentation, expr: &UniversalExpr, rep: &HopfRep) -> Result<GradedMatrix> {
    eval_universal_multi(hopf, expr, &vec![rep; expr.legs])
}

/// Evaluates an expression with one representation per leg.
pub fn eval_universal_multi(hopf: &HopfPresentation, expr: &UniversalExpr, reps: &[&HopfRep]) -> Result<GradedMatrix> {
    if reps.len() != expr.legs {
        return Err(QError::LegCount { expected: reps.len(), found: expr.legs });
    }
    if let Some(k) = expr.truncation {
        for r in reps {
            r.check_nilpotent(hopf, k)?;
        }
    }
    let spaces: Vec<SuperSpace> = reps.iter().map(|r| r.space.clone()).collect();
    let trivial = SuperSpace::from_parities(&[0])?;
    let total = if spaces.is_empty() { trivial.clone() } else { SuperSpace::tensor_all(&spaces)? };
    let mut sum = GradedMatrix::zeros(&total, &total, hopf.mode());
    for t in &expr.terms {
        let mut op: Option<GradedMatrix> = None;
        for (w, r) in t.words.iter().zip(reps) {
            let m = r.word(w)?;
            op = Some(match op {
                None => m,
                Some(acc) => tensor_product_op(&acc, &m)?,
            });
        }
        let op = op.unwrap_or_else(|| GradedMatrix::identity(&trivial, Mode::Complex));
        sum = sum.try_add(&op.scale(&t.coeff)?)?;
    }
    if expr.prefactor.is_zero() || spaces.is_empty() {
        let c = expr.prefactor.at_zero().exp();
        return Ok(sum.scale(&c)?);
    }
    let cartans: Vec<&[GradedMatrix]> = reps.iter().map(|r| r.cartan.as_slice()).collect();
    let pre = expr.prefactor.operator(&cartans, &spaces)?;
    Ok(supercore::matrix_exp(&pre)?.try_compose(&sum)?)
}
