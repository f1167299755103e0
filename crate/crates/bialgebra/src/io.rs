//! JSON algebra spec files. Indices in files are 1-based.

use std::collections::BTreeMap;
use std::path::Path;

use serde::{Deserialize, Serialize};
use supercore::{c64, CMat, SuperSpace};

use crate::error::{Result, SpecError};
use crate::spec::{AlgebraSpec, BasisElement, Representation};
use crate::validate::validate_spec;

/// Axiom tolerance applied when loading files.
pub const LOAD_TOLERANCE: f64 = 1e-10;

#[derive(Serialize, Deserialize)]
struct BasisFile {
    label: String,
    parity: u8,
}

#[derive(Serialize, Deserialize)]
struct CoeffFile {
    k: usize,
    value: f64,
}

#[derive(Serialize, Deserialize)]
struct BracketFile {
    i: usize,
    j: usize,
    coeffs: Vec<CoeffFile>,
}

#[derive(Serialize, Deserialize)]
struct RepFile {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    labels: Option<Vec<String>>,
    parities: Vec<u8>,
    matrices: Vec<Vec<Vec<[f64; 2]>>>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct SpecFile {
    name: String,
    basis: Vec<BasisFile>,
    #[serde(default)]
    brackets: Vec<BracketFile>,
    form: Vec<Vec<f64>>,
    plus: Vec<usize>,
    minus: Vec<usize>,
    dual_pairing: Vec<[usize; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    cartan: Option<Vec<usize>>,
    #[serde(default)]
    reps: BTreeMap<String, RepFile>,
}

fn schema(msg: impl Into<String>) -> SpecError {
    SpecError::Schema(msg.into())
}

fn index(i: usize, d: usize, what: &str) -> Result<usize> {
    if i == 0 || i > d {
        return Err(schema(format!("{what} index {i} outside 1..={d}")));
    }
    Ok(i - 1)
}

fn from_file(f: SpecFile) -> Result<AlgebraSpec> {
    let d = f.basis.len();
    if d == 0 {
        return Err(schema("basis is empty"));
    }
    let mut basis = Vec::with_capacity(d);
    for b in f.basis {
        if b.parity > 1 {
            return Err(schema(format!("basis element {} has parity {}", b.label, b.parity)));
        }
        basis.push(BasisElement { label: b.label, parity: b.parity });
    }
    if f.form.len() != d || f.form.iter().any(|r| r.len() != d) {
        return Err(schema(format!("form must be a {d}x{d} array")));
    }
    let mut spec = AlgebraSpec::new(&f.name, basis, f.form);
    for br in &f.brackets {
        let i = index(br.i, d, "bracket")?;
        let j = index(br.j, d, "bracket")?;
        if i > j {
            return Err(schema(format!("bracket ({}, {}) must have i <= j", br.i, br.j)));
        }
        for c in &br.coeffs {
            let k = index(c.k, d, "bracket coefficient")?;
            spec.set_bracket(i, j, k, c.value);
        }
    }
    spec.plus = f.plus.iter().map(|&i| index(i, d, "plus")).collect::<Result<_>>()?;
    spec.minus = f.minus.iter().map(|&i| index(i, d, "minus")).collect::<Result<_>>()?;
    spec.dual_pairing = f
        .dual_pairing
        .iter()
        .map(|[p, m]| Ok((index(*p, d, "dual_pairing")?, index(*m, d, "dual_pairing")?)))
        .collect::<Result<_>>()?;
    spec.cartan = f.cartan.unwrap_or_default().iter().map(|&i| index(i, d, "cartan")).collect::<Result<_>>()?;
    for (name, rf) in f.reps {
        if rf.parities.iter().any(|&p| p > 1) {
            return Err(schema(format!("representation {name} has a parity flag outside {{0, 1}}")));
        }
        let space = match rf.labels {
            Some(labels) => SuperSpace::new(labels, rf.parities.clone()),
            None => SuperSpace::from_parities(&rf.parities),
        }
        .map_err(|e| schema(format!("representation {name}: {e}")))?;
        let n = space.dim();
        if rf.matrices.len() != d {
            return Err(schema(format!("representation {name} has {} matrices, expected {d}", rf.matrices.len())));
        }
        let mut mats = Vec::with_capacity(d);
        for m in rf.matrices {
            if m.len() != n || m.iter().any(|r| r.len() != n) {
                return Err(schema(format!("representation {name} matrices must be {n}x{n}")));
            }
            mats.push(CMat::from_fn(n, n, |i, j| c64(m[i][j][0], m[i][j][1])));
        }
        spec.add_rep(Representation::new(&name, space, mats)?);
    }
    Ok(spec)
}

fn to_file(spec: &AlgebraSpec) -> SpecFile {
    let d = spec.dim();
    let mut brackets = Vec::new();
    for i in 0..d {
        for j in i..d {
            let coeffs: Vec<CoeffFile> = (0..d)
                .filter(|&k| spec.bracket_coeff(i, j, k) != 0.0)
                .map(|k| CoeffFile { k: k + 1, value: spec.bracket_coeff(i, j, k) })
                .collect();
            if !coeffs.is_empty() {
                brackets.push(BracketFile { i: i + 1, j: j + 1, coeffs });
            }
        }
    }
    let reps = spec
        .reps
        .iter()
        .map(|(name, rep)| {
            let m = rep
                .matrices
                .iter()
                .map(|g| {
                    let c = g.complex().expect("representations are complex");
                    (0..c.nrows()).map(|i| (0..c.ncols()).map(|j| [c[(i, j)].re, c[(i, j)].im]).collect()).collect()
                })
                .collect();
            (name.clone(), RepFile {
                    labels: Some(rep.space.labels().to_vec()),
                    parities: rep.space.parities().to_vec(),
                    matrices: m,
                },
            )
        })
        .collect();
    SpecFile {
        name: spec.name.clone(),
        basis: spec.basis.iter().map(|b| BasisFile { label: b.label.clone(), parity: b.parity }).collect(),
        brackets,
        form: spec.form.clone(),
        plus: spec.plus.iter().map(|i| i + 1).collect(),
        minus: spec.minus.iter().map(|i| i + 1).collect(),
        dual_pairing: spec.dual_pairing.iter().map(|(p, m)| [p + 1, m + 1]).collect(),
        cartan: if spec.cartan.is_empty() { None } else { Some(spec.cartan.iter().map(|i| i + 1).collect()) },
        reps,
    }
}

/// Parses and schema-checks a spec document without checking axioms.
pub fn parse_algebra(json: &str) -> Result<AlgebraSpec> {
    let f: SpecFile = serde_json::from_str(json).map_err(|e| SpecError::Parse(e.to_string()))?;
    from_file(f)
}

/// Serializes a spec to the file format.
pub fn algebra_to_json(spec: &AlgebraSpec) -> String {
    serde_json::to_string_pretty(&to_file(spec)).expect("spec serializes")
}

/// Parses a document and rejects it if any axiom fails at [`LOAD_TOLERANCE`].
pub fn load_algebra_str(json: &str) -> Result<AlgebraSpec> {
    let spec = parse_algebra(json)?;
    let report = validate_spec(&spec, LOAD_TOLERANCE)?;
    if !report.passed() {
        return Err(SpecError::Axiom(Box::new(report)));
    }
    Ok(spec)
}

/// Reads, parses and validates a spec file.
pub fn load_algebra(path: &Path) -> Result<AlgebraSpec> {
    let text = std::fs::read_to_string(path).map_err(|e| SpecError::Io(format!("{}: {e}", path.display())))?;
    load_algebra_str(&text)
}

/// Writes a spec file.
pub fn save_algebra(spec: &AlgebraSpec, path: &Path) -> Result<()> {
    std::fs::write(path, algebra_to_json(spec)).map_err(|e| SpecError::Io(format!("{}: {e}", path.display())))
}
