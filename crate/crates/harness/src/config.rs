use std::path::{Path, PathBuf};

use monodromy::TransportParams;
use serde::{Deserialize, Serialize};
use supercore::Complex64;

use crate::complex::ComplexValue;
use crate::error::{HarnessError, Result};

/// Pass thresholds per check family.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct Tolerances {
    pub classical: f64,
    pub trig: f64,
    pub flatness: f64,
    pub quantum: f64,
    pub hexagon: f64,
    pub drinfeld_u: f64,
    pub algebraic_relations: f64,
    pub numeric_relations: f64,
    pub closed_form: f64,
    pub trace: f64,
    pub spectrum: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Tolerances {
            classical: 1e-14,
            trig: 1e-11,
            flatness: 1e-10,
            quantum: 1e-12,
            hexagon: 1e-11,
            drinfeld_u: 1e-10,
            algebraic_relations: 1e-11,
            numeric_relations: 1e-7,
            closed_form: 1e-10,
            trace: 1e-5,
            spectrum: 1e-6,
        }
    }
}

impl Tolerances {
    fn all(&self) -> [(&'static str, f64); 11] {
        [
            ("classical", self.classical),
            ("trig", self.trig),
            ("flatness", self.flatness),
            ("quantum", self.quantum),
            ("hexagon", self.hexagon),
            ("drinfeld_u", self.drinfeld_u),
            ("algebraic_relations", self.algebraic_relations),
            ("numeric_relations", self.numeric_relations),
            ("closed_form", self.closed_form),
            ("trace", self.trace),
            ("spectrum", self.spectrum),
        ]
    }
}

/// Adaptive integrator settings.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct Integrator {
    pub abs_tol: f64,
    pub rel_tol: f64,
    pub max_step: f64,
    pub validate: bool,
}

/// Error-control tolerance of the suite's transports. Tighter than the
/// transport default: a Jordan block in a generator turns an entry error `ε`
/// into an eigenvalue error of order `√ε`, and spectra are compared at 1e-6.
pub const SUITE_TRANSPORT_TOL: f64 = 1e-12;

impl Default for Integrator {
    fn default() -> Self {
        let p = TransportParams::default();
        Integrator { abs_tol: SUITE_TRANSPORT_TOL, rel_tol: SUITE_TRANSPORT_TOL, max_step: p.max_step, validate: p.validate }
    }
}

impl From<Integrator> for TransportParams {
    fn from(i: Integrator) -> Self {
        TransportParams { abs_tol: i.abs_tol, rel_tol: i.rel_tol, max_step: i.max_step, validate: i.validate }
    }
}

fn default_rep() -> String {
    "vector".into()
}
fn default_n() -> usize {
    2
}
fn default_h() -> Vec<ComplexValue> {
    vec![ComplexValue::Real(0.2)]
}
fn default_word_len() -> usize {
    4
}
fn default_seed() -> u64 {
    7
}

/// Everything `run_suite` needs. Field names match the JSON config file.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SuiteConfig {
    /// Built-in name (`sl2`, `gl11`) or path to a spec file.
    pub algebra: String,
    #[serde(default = "default_rep")]
    pub rep: String,
    #[serde(default = "default_n")]
    pub n: usize,
    #[serde(default = "default_h")]
    pub h: Vec<ComplexValue>,
    /// Coefficients of `s` over the declared Cartan basis; empty means zero.
    #[serde(default)]
    pub s: Vec<f64>,
    #[serde(default)]
    pub tolerances: Tolerances,
    #[serde(default = "default_word_len")]
    pub max_word_len: usize,
    #[serde(default)]
    pub integrator: Integrator,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub output: Option<PathBuf>,
    /// Seed for the random sample points.
    #[serde(default = "default_seed")]
    pub seed: u64,
}

impl SuiteConfig {
    pub fn new(algebra: &str) -> Self {
        SuiteConfig {
            algebra: algebra.into(),
            rep: default_rep(),
            n: default_n(),
            h: default_h(),
            s: Vec::new(),
            tolerances: Tolerances::default(),
            max_word_len: default_word_len(),
            integrator: Integrator::default(),
            output: None,
            seed: default_seed(),
        }
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let c: SuiteConfig = serde_json::from_str(text).map_err(|e| HarnessError::Config(e.to_string()))?;
        c.validate()?;
        Ok(c)
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(|e| HarnessError::Io(format!("{}: {e}", path.display())))?;
        SuiteConfig::from_json(&text)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("config serializes")
    }

    pub fn h_values(&self) -> Result<Vec<Complex64>> {
        self.h.iter().map(|v| v.value()).collect()
    }

    pub fn validate(&self) -> Result<()> {
        let err = |m: String| Err(HarnessError::Config(m));
        if self.n == 0 {
            return err("n must be at least 1".into());
        }
        if self.h.is_empty() {
            return err("h list is empty".into());
        }
        for h in self.h_values()? {
            if !(h.re.is_finite() && h.im.is_finite()) {
                return err(format!("h value {h} is not finite"));
            }
        }
        for (name, t) in self.tolerances.all() {
            if !(t > 0.0 && t.is_finite()) {
                return err(format!("tolerance {name} must be positive, got {t}"));
            }
        }
        let i = &self.integrator;
        if !(i.abs_tol > 0.0 && i.rel_tol > 0.0 && i.max_step > 0.0) {
            return err("integrator tolerances and max_step must be positive".into());
        }
        if self.s.iter().any(|x| !x.is_finite()) {
            return err("s has a non-finite coefficient".into());
        }
        Ok(())
    }
}
