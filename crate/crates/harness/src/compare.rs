use petgraph::algo::maximum_matching;
use petgraph::graph::UnGraph;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use supercore::{CMat, Complex64};

use monodromy::WordEvaluator;

use crate::error::{HarnessError, Result};
use crate::words::{alphabet, reduced_words};

/// Pass thresholds for [`compare_word_evaluators`].
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct CompareTol {
    pub trace: f64,
    pub spectrum: f64,
}

impl Default for CompareTol {
    fn default() -> Self {
        CompareTol { trace: 1e-5, spectrum: 1e-6 }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct WordRow {
    pub word: String,
    pub trace_a: [f64; 2],
    pub trace_b: [f64; 2],
    pub difference: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SpectrumRow {
    pub generator: String,
    pub distance: f64,
}

/// Least-squares solution of `A(g)·P = P·B(g)` over the generators.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Intertwiner {
    /// `max_g ‖A(g)P − PB(g)‖_F / ‖P‖_F`.
    pub residual: f64,
    /// Ratio of extreme singular values of `P`.
    pub condition: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Comparison {
    pub words: Vec<WordRow>,
    pub spectra: Vec<SpectrumRow>,
    pub max_trace_difference: f64,
    pub max_spectrum_distance: f64,
    pub intertwiner: Option<Intertwiner>,
    pub tol: CompareTol,
    pub passed: bool,
}

fn pair(z: Complex64) -> [f64; 2] {
    [z.re, z.im]
}

pub fn eigenvalues(m: &CMat) -> Vec<Complex64> {
    m.clone().schur().eigenvalues().expect("complex Schur form is triangular").iter().copied().collect()
}

fn has_perfect_matching(a: &[Complex64], b: &[Complex64], t: f64) -> bool {
    let d = a.len();
    let mut g = UnGraph::<(), ()>::with_capacity(2 * d, d * d);
    let nodes: Vec<_> = (0..2 * d).map(|_| g.add_node(())).collect();
    for i in 0..d {
        for j in 0..d {
            if (a[i] - b[j]).norm() <= t {
                g.add_edge(nodes[i], nodes[d + j], ());
            }
        }
    }
    maximum_matching(&g).is_perfect()
}

/// Bottleneck distance between two eigenvalue multisets: the smallest `t`
/// admitting a pairing with every pair within `t`.
pub fn spectrum_distance(a: &[Complex64], b: &[Complex64]) -> f64 {
    if a.len() != b.len() {
        return f64::INFINITY;
    }
    let mut cand: Vec<f64> = a.iter().flat_map(|x| b.iter().map(move |y| (x - y).norm())).collect();
    cand.sort_by(f64::total_cmp);
    cand.dedup();
    if cand.is_empty() {
        return 0.0;
    }
    let (mut lo, mut hi) = (0, cand.len() - 1);
    while lo < hi {
        let mid = (lo + hi) / 2;
        if has_perfect_matching(a, b, cand[mid]) {
            hi = mid;
        } else {
            lo = mid + 1;
        }
    }
    cand[lo]
}

fn intertwiner(a: &[CMat], b: &[CMat]) -> Option<Intertwiner> {
    let d = a.first()?.nrows();
    // vec(AP − PB) = (I⊗A − Bᵀ⊗I) vec(P), column-major vec
    let id = CMat::identity(d, d);
    let mut big = CMat::zeros(a.len() * d * d, d * d);
    for (k, (x, y)) in a.iter().zip(b).enumerate() {
        let block = id.kronecker(x) - y.transpose().kronecker(&id);
        big.view_mut((k * d * d, 0), (d * d, d * d)).copy_from(&block);
    }
    let svd = big.svd(false, true);
    let v_t = svd.v_t?;
    let (idx, _) = svd.singular_values.iter().enumerate().min_by(|x, y| x.1.total_cmp(y.1))?;
    let p = CMat::from_fn(d, d, |i, j| v_t[(idx, j * d + i)].conj());
    let norm = p.norm();
    let residual = a.iter().zip(b).map(|(x, y)| (x * &p - &p * y).norm() / norm).fold(0.0, f64::max);
    let sv = p.singular_values();
    let smax = sv.iter().copied().fold(0.0, f64::max);
    let smin = sv.iter().copied().fold(f64::INFINITY, f64::min);
    Some(Intertwiner { residual, condition: smax / smin })
}

/// Compares two braid-group representations on every freely reduced word of
/// length at most `max_len` over `b_i^{±1}, X_1^{±1}`, and compares the spectra
/// of the generators. Symmetric in its arguments.
pub fn compare_word_evaluators(a: &WordEvaluator, b: &WordEvaluator, max_len: usize, tol: CompareTol) -> Result<Comparison> {
    if a.n() != b.n() {
        return Err(HarnessError::Dimension(format!("n = {} vs n = {}", a.n(), b.n())));
    }
    if a.space().dim() != b.space().dim() {
        return Err(HarnessError::Dimension(format!("dim {} vs dim {}", a.space().dim(), b.space().dim())));
    }
    let n = a.n();
    let (wa, wb) = rayon::join(|| a.warm(), || b.warm());
    wa?;
    wb?;

    let words = reduced_words(n, max_len);
    let rows = words
        .par_iter()
        .map(|w| -> Result<WordRow> {
            let ta = a.eval(w)?.trace(false)?.constant_term();
            let tb = b.eval(w)?.trace(false)?.constant_term();
            Ok(WordRow { word: w.to_string(), trace_a: pair(ta), trace_b: pair(tb), difference: (ta - tb).norm() })
        })
        .collect::<Result<Vec<_>>>()?;

    let mut spectra = Vec::new();
    let mut ga = Vec::new();
    let mut gb = Vec::new();
    for g in alphabet(n).into_iter().filter(|&(_, e)| e > 0).map(|(g, _)| g) {
        let ma = a.generator(g)?.coeff(0).clone();
        let mb = b.generator(g)?.coeff(0).clone();
        let distance = spectrum_distance(&eigenvalues(&ma), &eigenvalues(&mb));
        spectra.push(SpectrumRow { generator: g.to_string(), distance });
        ga.push(ma);
        gb.push(mb);
    }
    let max_trace_difference = rows.iter().map(|r| r.difference).fold(0.0, f64::max);
    let max_spectrum_distance = spectra.iter().map(|r| r.distance).fold(0.0, f64::max);
    let passed = max_trace_difference < tol.trace && max_spectrum_distance < tol.spectrum;
    Ok(Comparison {
        words: rows,
        spectra,
        max_trace_difference,
        max_spectrum_distance,
        intertwiner: intertwiner(&ga, &gb),
        tol,
        passed,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use supercore::c64;

    #[test]
    fn bottleneck_ignores_order() {
        let a = [c64(1.0, 0.0), c64(0.0, 1.0), c64(-1.0, 0.0)];
        let b = [c64(-1.0, 0.0), c64(1.0, 1e-3), c64(0.0, 1.0)];
        assert!((spectrum_distance(&a, &b) - 1e-3).abs() < 1e-15);
        assert_eq!(spectrum_distance(&b, &a), spectrum_distance(&a, &b));
        // sorting by real part would pair 0.5 with 0.6 and 0.6 with 5
        let c = [c64(0.5, 0.0), c64(0.6, 0.0)];
        let d = [c64(0.6, 0.0), c64(0.5, 0.0)];
        assert_eq!(spectrum_distance(&c, &d), 0.0);
        assert_eq!(spectrum_distance(&c, &a), f64::INFINITY);
    }

    #[test]
    fn eigenvalues_of_triangular() {
        let m = CMat::from_fn(2, 2, |i, j| if i <= j { c64((i + j + 1) as f64, 0.0) } else { c64(0.0, 0.0) });
        let mut e: Vec<f64> = eigenvalues(&m).iter().map(|z| z.re).collect();
        e.sort_by(f64::total_cmp);
        assert!((e[0] - 1.0).abs() < 1e-14 && (e[1] - 3.0).abs() < 1e-14);
    }

    #[test]
    fn conjugate_pair_has_small_intertwiner() {
        let a = vec![CMat::from_fn(2, 2, |i, j| c64((i * 2 + j) as f64, 1.0))];
        let p = CMat::from_fn(2, 2, |i, j| c64(if i == j { 2.0 } else { 0.5 }, 0.0));
        let b: Vec<CMat> = a.iter().map(|x| p.clone().try_inverse().unwrap() * x * &p).collect();
        let t = intertwiner(&a, &b).unwrap();
        assert!(t.residual < 1e-12, "{t:?}");
        assert!(t.condition.is_finite());
    }
}
