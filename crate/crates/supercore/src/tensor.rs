//! Koszul-signed tensor products, flips and slot placements.
//!
//! Slots are numbered from 1. The basis of `V_1 ⊗ ... ⊗ V_n` is ordered
//! lexicographically with the leftmost factor most significant.

use num_complex::Complex64;

use crate::error::{Result, SuperError};
use crate::matrix::{convolve, zero, CMat, GradedMatrix};
use crate::scalar::{Mode, Scalar};
use crate::space::SuperSpace;

fn sign(exp: u8) -> f64 {
    if exp.is_multiple_of(2) {
        1.0
    } else {
        -1.0
    }
}

/// Matrix of `σ(v ⊗ w) = (-1)^{|v||w|} w ⊗ v` from `V ⊗ W` to `W ⊗ V`.
pub fn koszul_flip(v: &SuperSpace, w: &SuperSpace) -> GradedMatrix {
    let (dv, dw) = (v.dim(), w.dim());
    let mut m = CMat::zeros(dv * dw, dv * dw);
    for i in 0..dv {
        for k in 0..dw {
            m[(k * dv + i, i * dw + k)] = Complex64::new(sign(v.parity(i) * w.parity(k)), 0.0);
        }
    }
    GradedMatrix::from_complex(v.tensor(w), w.tensor(v), m).expect("flip shape")
}

fn signed_kron(a: &GradedMatrix, b: &GradedMatrix, x: &CMat, y: &CMat) -> CMat {
    let (ra, ca) = (x.nrows(), x.ncols());
    let (rb, cb) = (y.nrows(), y.ncols());
    let mut out = CMat::zeros(ra * rb, ca * cb);
    for i in 0..ca {
        let pv = a.dom().parity(i);
        for k2 in 0..rb {
            for k in 0..cb {
                let yb = y[(k2, k)];
                if yb == zero() {
                    continue;
                }
                let pb = (b.cod().parity(k2) + b.dom().parity(k)) % 2;
                let s = sign(pb * pv);
                for i2 in 0..ra {
                    out[(i2 * rb + k2, i * cb + k)] = x[(i2, i)] * yb * s;
                }
            }
        }
    }
    out
}

/// `(A ⊗ B)(v ⊗ w) = (-1)^{|B||v|} Av ⊗ Bw`, applied entrywise so that
/// inhomogeneous operators are handled through their parity blocks.
pub fn tensor_product_op(a: &GradedMatrix, b: &GradedMatrix) -> Result<GradedMatrix> {
    let mode = a.mode().combine(b.mode())?;
    let (pa, pb) = (a.promote(mode)?, b.promote(mode)?);
    let coeffs = convolve(pa.coeffs(), pb.coeffs(), mode.coeff_count(), |x, y| signed_kron(a, b, x, y));
    let dom = a.dom().tensor(b.dom());
    let cod = a.cod().tensor(b.cod());
    let (r, c) = (cod.dim(), dom.dim());
    let coeffs = coeffs.into_iter().map(|m| if m.nrows() == r { m } else { CMat::zeros(r, c) }).collect();
    GradedMatrix::new(dom, cod, mode, coeffs)
}

fn check_slot(j: usize, n: usize) -> Result<()> {
    if j == 0 || j > n {
        return Err(SuperError::SlotOutOfRange { index: j, count: n });
    }
    Ok(())
}

/// `I ⊗ ... ⊗ op ⊗ ... ⊗ I` where `op` acts on slots `first..first + width`.
pub fn embed(op: &GradedMatrix, first: usize, width: usize, spaces: &[SuperSpace]) -> Result<GradedMatrix> {
    let n = spaces.len();
    check_slot(first, n)?;
    check_slot(first + width - 1, n)?;
    let block = SuperSpace::tensor_all(&spaces[first - 1..first - 1 + width])?;
    if !op.dom().compatible(&block) {
        return Err(SuperError::Dimension(format!("operator does not act on slots {first}..{}", first + width - 1)));
    }
    let mut out = op.clone();
    if first > 1 {
        let left = SuperSpace::tensor_all(&spaces[..first - 1])?;
        out = tensor_product_op(&GradedMatrix::identity(&left, op.mode()), &out)?;
    }
    if first - 1 + width < n {
        let right = SuperSpace::tensor_all(&spaces[first - 1 + width..])?;
        out = tensor_product_op(&out, &GradedMatrix::identity(&right, op.mode()))?;
    }
    Ok(out)
}

/// `a^{(j)}`: the operator `a` in slot `j` of `V_1 ⊗ ... ⊗ V_n`.
pub fn place_single(a: &GradedMatrix, j: usize, spaces: &[SuperSpace]) -> Result<GradedMatrix> {
    embed(a, j, 1, spaces)
}

/// A scalar multiple of `left ⊗ right`.
#[derive(Clone, Debug, PartialEq)]
pub struct PureTensor {
    pub coeff: Scalar,
    pub left: GradedMatrix,
    pub right: GradedMatrix,
}

impl PureTensor {
    pub fn new(coeff: Scalar, left: GradedMatrix, right: GradedMatrix) -> Self {
        PureTensor { coeff, left, right }
    }

    /// Splits into parity-homogeneous pure tensors.
    pub fn homogeneous_parts(&self) -> Vec<PureTensor> {
        let mut out = Vec::new();
        for pa in 0..2 {
            let a = self.left.parity_component(pa);
            if a.max_abs() == 0.0 {
                continue;
            }
            for pb in 0..2 {
                let b = self.right.parity_component(pb);
                if b.max_abs() == 0.0 {
                    continue;
                }
                out.push(PureTensor::new(self.coeff.clone(), a.clone(), b));
            }
        }
        out
    }

    /// Parities of the two factors; `None` if either is inhomogeneous.
    pub fn parities(&self) -> Option<(u8, u8)> {
        Some((self.left.parity()?, self.right.parity()?))
    }

    /// `x^{op} = (-1)^{|a||b|} b ⊗ a` (the Koszul flip of factors).
    pub fn flipped(&self) -> Vec<PureTensor> {
        self.homogeneous_parts()
            .into_iter()
            .map(|t| {
                let (pa, pb) = t.parities().expect("homogeneous");
                PureTensor::new(t.coeff.scale(Complex64::new(sign(pa * pb), 0.0)), t.right, t.left)
            })
            .collect()
    }

    /// The operator `coeff · (left ⊗ right)`.
    pub fn to_matrix(&self) -> Result<GradedMatrix> {
        tensor_product_op(&self.left, &self.right)?.scale(&self.coeff)
    }
}

/// Sum of a nonempty list of pure tensors as one operator.
pub fn tensor_sum(terms: &[PureTensor]) -> Result<GradedMatrix> {
    let (first, rest) = terms.split_first().ok_or(SuperError::Dimension("empty tensor sum".into()))?;
    rest.iter().try_fold(first.to_matrix()?, |acc, t| acc.try_add(&t.to_matrix()?))
}

/// Flip of every summand.
pub fn flip_terms(terms: &[PureTensor]) -> Vec<PureTensor> {
    terms.iter().flat_map(|t| t.flipped()).collect()
}

/// `x_{jk}`: the first factor in slot `j`, the second in slot `k`. For `j > k`
/// each summand carries the sign `(-1)^{|a||b|}` and is written as
/// `b^{(k)} a^{(j)}`.
pub fn place_pair(x: &[PureTensor], j: usize, k: usize, spaces: &[SuperSpace]) -> Result<GradedMatrix> {
    let n = spaces.len();
    check_slot(j, n)?;
    check_slot(k, n)?;
    if j == k {
        return Err(SuperError::SameSlot(j));
    }
    let total = SuperSpace::tensor_all(spaces)?;
    let mode = x.iter().try_fold(Mode::Complex, |m, t| {
        m.combine(t.coeff.mode())?.combine(t.left.mode())?.combine(t.right.mode())
    })?;
    let mut out = GradedMatrix::zeros(&total, &total, mode);
    for term in x.iter().flat_map(|t| t.homogeneous_parts()) {
        let (pa, pb) = term.parities().expect("homogeneous");
        let a = place_single(&term.left, j, spaces)?;
        let b = place_single(&term.right, k, spaces)?;
        let op = if j < k {
            a.try_compose(&b)?.scale(&term.coeff)?
        } else {
            b.try_compose(&a)?.scale(&term.coeff.scale(Complex64::new(sign(pa * pb), 0.0)))?
        };
        out = out.try_add(&op)?;
    }
    Ok(out)
}

fn unit(space: &SuperSpace, r: usize, c: usize) -> GradedMatrix {
    let mut m = CMat::zeros(space.dim(), space.dim());
    m[(r, c)] = Complex64::new(1.0, 0.0);
    GradedMatrix::endo(space, m).expect("unit shape")
}

/// Writes an endomorphism of `V ⊗ W` as a sum of signed tensors of matrix
/// units `E_ab ⊗ E_cd`.
pub fn decompose_pair(x: &GradedMatrix, v: &SuperSpace, w: &SuperSpace) -> Result<Vec<PureTensor>> {
    let vw = v.tensor(w);
    if !x.dom().compatible(&vw) || !x.cod().compatible(&vw) {
        return Err(SuperError::Dimension("operator is not an endomorphism of V ⊗ W".into()));
    }
    let (dv, dw) = (v.dim(), w.dim());
    let mut out = Vec::new();
    for a in 0..dv {
        for c in 0..dw {
            for b in 0..dv {
                for d in 0..dw {
                    let e = x.entry(a * dw + c, b * dw + d);
                    if e.is_zero() {
                        continue;
                    }
                    let s = sign((w.parity(c) + w.parity(d)) * v.parity(b));
                    out.push(PureTensor::new(e.scale(Complex64::new(s, 0.0)), unit(v, a, b), unit(w, c, d)));
                }
            }
        }
    }
    Ok(out)
}

/// Multiplies the first two tensor factors: for `X` on `V ⊗ V ⊗ R` returns
/// `(m ⊗ id_R)(X)` on `V ⊗ R`, where `m(E_ab ⊗ E_ce) = δ_bc E_ae`. With
/// `rest = None` the result acts on `V`.
pub fn contract_leading_pair(x: &GradedMatrix, v: &SuperSpace, rest: Option<&SuperSpace>) -> Result<GradedMatrix> {
    let trivial = SuperSpace::from_parities(&[0])?;
    let r = rest.unwrap_or(&trivial);
    let full = v.tensor(v).tensor(r);
    if !x.dom().compatible(&full) || !x.cod().compatible(&full) {
        return Err(SuperError::Dimension("operator is not an endomorphism of V ⊗ V ⊗ R".into()));
    }
    let (dv, dr) = (v.dim(), r.dim());
    let target = match rest {
        Some(r) => v.tensor(r),
        None => v.clone(),
    };
    let idx = |a: usize, c: usize, i: usize| (a * dv + c) * dr + i;
    x.map_coeffs(target.clone(), target, |m| {
        let mut y = CMat::zeros(dv * dr, dv * dr);
        for a in 0..dv {
            for c in 0..dv {
                for e in 0..dv {
                    for i in 0..dr {
                        for j in 0..dr {
                            let val = m[(idx(a, c, i), idx(c, e, j))];
                            if val == zero() {
                                continue;
                            }
                            let (pc, pe) = (v.parity(c), v.parity(e));
                            let pij = (r.parity(i) + r.parity(j)) % 2;
                            let s = sign((pc + pe) * pc + pij * (pc + pe)) * sign(pij * pe);
                            y[(a * dr + i, e * dr + j)] += val * s;
                        }
                    }
                }
            }
        }
        y
    })
}

/// Super permutation operator sending the vector in slot `k` to slot
/// `perm[k]` (0-based), built from adjacent Koszul flips in bubble order.
pub fn permutation_operator(perm: &[usize], spaces: &[SuperSpace]) -> Result<GradedMatrix> {
    let n = spaces.len();
    if perm.len() != n {
        return Err(SuperError::Dimension(format!("permutation of {} slots for {n} spaces", perm.len())));
    }
    let mut seen = vec![false; n];
    for &p in perm {
        if p >= n || seen[p] {
            return Err(SuperError::Dimension("not a permutation".into()));
        }
        seen[p] = true;
    }
    // pos[k]: current slot of the vector that started in slot k.
    let mut slot_of: Vec<usize> = (0..n).collect();
    let mut current: Vec<SuperSpace> = spaces.to_vec();
    let total = SuperSpace::tensor_all(spaces)?;
    let mut out = GradedMatrix::identity(&total, Mode::Complex);
    loop {
        let mut swapped = false;
        for s in 0..n.saturating_sub(1) {
            let k1 = (0..n).find(|&k| slot_of[k] == s).expect("slot occupied");
            let k2 = (0..n).find(|&k| slot_of[k] == s + 1).expect("slot occupied");
            if perm[k1] > perm[k2] {
                let flip = koszul_flip(&current[s], &current[s + 1]);
                let mut op = embed(&flip, s + 1, 2, &current)?;
                current.swap(s, s + 1);
                op = op.with_spaces(op.dom().clone(), SuperSpace::tensor_all(&current)?)?;
                out = op.try_compose(&out)?;
                slot_of.swap(k1, k2);
                swapped = true;
            }
        }
        if !swapped {
            break;
        }
    }
    Ok(out)
}
