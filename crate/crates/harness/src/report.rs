use std::path::Path;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::error::{HarnessError, Result};

pub const VERSION: &str = env!("CARGO_PKG_VERSION");

/// One check outcome. `residual` is always a number; a check that errored
/// records `f64::MAX` and the message in `note`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Record {
    pub id: String,
    pub digest: String,
    pub residual: f64,
    pub tolerance: f64,
    pub pass: bool,
    /// Seconds.
    pub wall_time: f64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct Summary {
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
    pub skipped: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub version: String,
    pub config: serde_json::Value,
    pub records: Vec<Record>,
    pub summary: Summary,
}

/// SHA-256 of a check id and its inputs, hex encoded.
pub fn digest(id: &str, inputs: &serde_json::Value) -> String {
    let mut h = Sha256::new();
    h.update(id.as_bytes());
    h.update([0u8]);
    h.update(inputs.to_string().as_bytes());
    h.finalize().iter().map(|b| format!("{b:02x}")).collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Json,
    Csv,
}

impl FromStr for Format {
    type Err = HarnessError;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "json" => Ok(Format::Json),
            "csv" => Ok(Format::Csv),
            other => Err(HarnessError::Config(format!("unknown format {other}"))),
        }
    }
}

impl Report {
    pub fn new(config: serde_json::Value) -> Self {
        Report { version: VERSION.into(), config, records: Vec::new(), summary: Summary::default() }
    }

    pub fn push(&mut self, record: Record) {
        self.records.push(record);
        self.tally();
    }

    pub fn skip(&mut self, id: &str) {
        self.summary.skipped.push(id.into());
    }

    fn tally(&mut self) {
        self.summary.total = self.records.len();
        self.summary.passed = self.records.iter().filter(|r| r.pass).count();
        self.summary.failed = self.summary.total - self.summary.passed;
    }

    pub fn record(&self, id: &str) -> Option<&Record> {
        self.records.iter().find(|r| r.id == id)
    }

    pub fn passed(&self) -> bool {
        self.summary.failed == 0
    }

    /// 0 when every record passed, 1 otherwise.
    pub fn exit_code(&self) -> i32 {
        if self.passed() {
            0
        } else {
            1
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// One row per record.
    pub fn to_csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(["id", "digest", "residual", "tolerance", "pass", "wall_time", "note"]).expect("in-memory write");
        for r in &self.records {
            w.write_record([
                r.id.clone(),
                r.digest.clone(),
                format!("{:e}", r.residual),
                format!("{:e}", r.tolerance),
                r.pass.to_string(),
                format!("{:.6}", r.wall_time),
                r.note.clone().unwrap_or_default(),
            ])
            .expect("in-memory write");
        }
        String::from_utf8(w.into_inner().expect("flush")).expect("utf8")
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => self.to_json(),
            Format::Csv => self.to_csv(),
        }
    }

    pub fn write(&self, path: &Path, format: Format) -> Result<()> {
        std::fs::write(path, self.render(format)).map_err(|e| HarnessError::Io(format!("{}: {e}", path.display())))
    }
}
