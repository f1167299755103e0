use supercore::{c64, CMat};

use crate::error::{Result, SpecError};
use crate::spec::AlgebraSpec;

/// Outcome of one axiom family.
#[derive(Clone, Debug, PartialEq)]
pub struct AxiomCheck {
    pub name: String,
    pub residual: f64,
    /// Violating index tuple (labels) at the largest residual.
    pub worst: Option<String>,
    pub passed: bool,
}

#[derive(Clone, Debug, PartialEq)]
pub struct ValidationReport {
    pub tolerance: f64,
    pub checks: Vec<AxiomCheck>,
}

impl ValidationReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> Vec<&AxiomCheck> {
        self.checks.iter().filter(|c| !c.passed).collect()
    }

    pub fn max_residual(&self) -> f64 {
        self.checks.iter().map(|c| c.residual).fold(0.0, f64::max)
    }

    pub fn check(&self, name: &str) -> Option<&AxiomCheck> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn summary(&self) -> String {
        let fails: Vec<String> = self
            .failures()
            .iter()
            .map(|c| format!("{} residual {:.3e} at {}", c.name, c.residual, c.worst.as_deref().unwrap_or("-")))
            .collect();
        if fails.is_empty() {
            "all axioms hold".to_string()
        } else {
            fails.join("; ")
        }
    }
}

struct Tracker {
    residual: f64,
    worst: Option<String>,
}

impl Tracker {
    fn new() -> Self {
        Tracker { residual: 0.0, worst: None }
    }

    fn see(&mut self, value: f64, at: impl FnOnce() -> String) {
        if value > self.residual {
            self.residual = value;
            self.worst = Some(at());
        }
    }

    fn finish(self, name: &str, tol: f64) -> AxiomCheck {
        AxiomCheck { name: name.to_string(), passed: self.residual <= tol, residual: self.residual, worst: self.worst }
    }
}

fn sgn(p: u8) -> f64 {
    if p % 2 == 1 {
        -1.0
    } else {
        1.0
    }
}

fn check_shapes(spec: &AlgebraSpec) -> Result<()> {
    let d = spec.dim();
    if d == 0 {
        return Err(SpecError::Schema("algebra has no basis".into()));
    }
    if spec.form.len() != d || spec.form.iter().any(|r| r.len() != d) {
        return Err(SpecError::Schema(format!("form must be {d}x{d}")));
    }
    let in_range = |v: &[usize]| v.iter().all(|&i| i < d);
    if !in_range(&spec.plus) || !in_range(&spec.minus) || !in_range(&spec.cartan) {
        return Err(SpecError::Schema("polarization index out of range".into()));
    }
    for rep in spec.reps.values() {
        if rep.matrices.len() != d {
            return Err(SpecError::Schema(format!("representation {} has {} matrices", rep.name, rep.matrices.len())));
        }
    }
    Ok(())
}

/// Polarization bookkeeping: disjoint blocks, every index placed, bijective pairing.
pub(crate) fn polarization_errors(spec: &AlgebraSpec) -> Option<String> {
    let d = spec.dim();
    if spec.plus.iter().any(|i| spec.minus.contains(i)) {
        return Some("plus and minus blocks overlap".into());
    }
    for i in 0..d {
        if !spec.plus.contains(&i) && !spec.minus.contains(&i) && !spec.cartan.contains(&i) {
            return Some(format!("{} is in no polarization block", spec.label(i)));
        }
    }
    if spec.plus.len() != spec.minus.len() || spec.dual_pairing.len() != spec.plus.len() {
        return Some("dual pairing must be a bijection between plus and minus".into());
    }
    let mut used_p = vec![false; d];
    let mut used_m = vec![false; d];
    for &(p, m) in &spec.dual_pairing {
        if p >= d || m >= d || !spec.plus.contains(&p) || !spec.minus.contains(&m) || used_p[p] || used_m[m] {
            return Some("dual pairing must be a bijection between plus and minus".into());
        }
        used_p[p] = true;
        used_m[m] = true;
    }
    None
}

/// Checks every axiom of the spec and reports residuals; `tol` decides pass/fail.
pub fn validate_spec(spec: &AlgebraSpec, tol: f64) -> Result<ValidationReport> {
    check_shapes(spec)?;
    let d = spec.dim();
    let p = |i: usize| spec.parity(i);
    let lab = |is: &[usize]| format!("({})", is.iter().map(|&i| spec.label(i)).collect::<Vec<_>>().join(", "));
    let mut checks = Vec::new();

    let mut grading = Tracker::new();
    let mut anti = Tracker::new();
    for i in 0..d {
        for j in 0..d {
            for k in 0..d {
                let c = spec.bracket_coeff(i, j, k);
                if (p(i) + p(j) + p(k)) % 2 == 1 {
                    grading.see(c.abs(), || lab(&[i, j, k]));
                }
                let partner = spec.bracket_coeff(j, i, k);
                anti.see((c + sgn(p(i) * p(j)) * partner).abs(), || lab(&[i, j, k]));
            }
        }
    }
    checks.push(grading.finish("grading", tol));
    checks.push(anti.finish("antisymmetry", tol));

    let nested = |x: usize, y: usize, z: usize| -> Vec<f64> {
        let inner = spec.bracket(y, z);
        let mut out = vec![0.0; d];
        for (m, cm) in inner.iter().enumerate() {
            if *cm != 0.0 {
                for (k, o) in out.iter_mut().enumerate() {
                    *o += cm * spec.bracket_coeff(x, m, k);
                }
            }
        }
        out
    };
    let mut jacobi = Tracker::new();
    for x in 0..d {
        for y in 0..d {
            for z in 0..d {
                let a = nested(x, y, z);
                let b = nested(y, z, x);
                let c = nested(z, x, y);
                let (sa, sb, sc) = (sgn(p(x) * p(z)), sgn(p(y) * p(x)), sgn(p(z) * p(y)));
                let r = (0..d).map(|k| (sa * a[k] + sb * b[k] + sc * c[k]).abs()).fold(0.0, f64::max);
                jacobi.see(r, || lab(&[x, y, z]));
            }
        }
    }
    checks.push(jacobi.finish("jacobi", tol));

    let b = &spec.form;
    let mut sym = Tracker::new();
    for i in 0..d {
        for j in 0..d {
            sym.see((b[i][j] - sgn(p(i) * p(j)) * b[j][i]).abs(), || lab(&[i, j]));
            if p(i) != p(j) {
                sym.see(b[i][j].abs(), || lab(&[i, j]));
            }
        }
    }
    checks.push(sym.finish("form_symmetry", tol));

    let pair = |v: &[f64], z: usize| -> f64 { (0..d).map(|k| v[k] * b[k][z]).sum() };
    let pair_left = |x: usize, v: &[f64]| -> f64 { (0..d).map(|k| b[x][k] * v[k]).sum() };
    let mut inv = Tracker::new();
    for x in 0..d {
        for y in 0..d {
            for z in 0..d {
                let r = (pair(&spec.bracket(x, y), z) - pair_left(x, &spec.bracket(y, z))).abs();
                inv.see(r, || lab(&[x, y, z]));
            }
        }
    }
    checks.push(inv.finish("form_invariance", tol));

    let gram = CMat::from_fn(d, d, |i, j| c64(b[i][j], 0.0));
    let sv = gram.singular_values();
    let (smin, smax) = (sv.min(), sv.max());
    let mut nd = Tracker::new();
    if smax == 0.0 || smin / smax < 1e-12 {
        nd.see(1.0, || format!("smallest singular value {smin:.3e}"));
    }
    checks.push(nd.finish("form_nondegenerate", tol));

    let mut pol = Tracker::new();
    if let Some(msg) = polarization_errors(spec) {
        pol.see(1.0, || msg);
    }
    checks.push(pol.finish("polarization", tol));

    let mut iso = Tracker::new();
    for block in [&spec.plus, &spec.minus] {
        for &i in block.iter() {
            for &j in block.iter() {
                iso.see(b[i][j].abs(), || lab(&[i, j]));
            }
        }
    }
    checks.push(iso.finish("isotropy", tol));

    let mut dual = Tracker::new();
    for &(pi, mi) in &spec.dual_pairing {
        for &(pj, _) in &spec.dual_pairing {
            let want = if pi == pj { 1.0 } else { 0.0 };
            dual.see((b[mi][pj] - want).abs(), || lab(&[mi, pj]));
        }
    }
    let shared = spec.shared_cartan();
    for &h in &shared {
        for &i in spec.plus.iter().chain(&spec.minus) {
            dual.see(b[h][i].abs(), || lab(&[h, i]));
        }
    }
    checks.push(dual.finish("dual_pairing", tol));

    let mut cb = Tracker::new();
    if !shared.is_empty() {
        let g = CMat::from_fn(shared.len(), shared.len(), |a, c| c64(b[shared[a]][shared[c]], 0.0));
        let sv = g.singular_values();
        if sv.min() < 1e-12 * sv.max().max(1e-300) {
            cb.see(1.0, || "shared Cartan block is degenerate".into());
        }
    }
    checks.push(cb.finish("cartan_block", tol));

    for rep in spec.reps.values() {
        let mut par = Tracker::new();
        for i in 0..d {
            let wrong = rep.image(i).parity_component(1 - p(i)).max_abs();
            par.see(wrong, || lab(&[i]));
        }
        checks.push(par.finish(&format!("rep_parity:{}", rep.name), tol));

        let mut hom = Tracker::new();
        for i in 0..d {
            for j in 0..d {
                let (x, y) = (rep.image(i), rep.image(j));
                let lhs = spec
                    .bracket(i, j)
                    .iter()
                    .enumerate()
                    .filter(|(_, c)| **c != 0.0)
                    .try_fold(supercore::GradedMatrix::zeros(&rep.space, &rep.space, supercore::Mode::Complex), |acc, (k, c)| {
                        acc.try_add(&rep.image(k).scale_complex(c64(*c, 0.0)))
                    })?;
                let rhs = (x * y).try_sub(&(y * x).scale_complex(c64(sgn(p(i) * p(j)), 0.0)))?;
                hom.see(lhs.distance(&rhs)?, || lab(&[i, j]));
            }
        }
        checks.push(hom.finish(&format!("rep_homomorphism:{}", rep.name), tol));
    }

    Ok(ValidationReport { tolerance: tol, checks })
}
