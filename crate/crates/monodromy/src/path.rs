use supercore::Complex64;

use crate::config::{lattice_distance, Chart};
use crate::error::{MonoError, Result};

/// Default minimum pairwise distance along a loop.
pub const DEFAULT_CLEARANCE: f64 = 0.1;
/// Samples per segment used by clearance checks.
pub const CLEARANCE_SAMPLES: usize = 1000;
const JOIN_TOL: f64 = 1e-12;

/// `e^{iθ}`, exact at multiples of `π/2`.
fn unit(theta: f64) -> Complex64 {
    let q = theta / std::f64::consts::FRAC_PI_2;
    if (q - q.round()).abs() < 1e-14 {
        return match (q.round() as i64).rem_euclid(4) {
            0 => Complex64::new(1.0, 0.0),
            1 => Complex64::new(0.0, 1.0),
            2 => Complex64::new(-1.0, 0.0),
            _ => Complex64::new(0.0, -1.0),
        };
    }
    Complex64::new(theta.cos(), theta.sin())
}

/// Trajectory of one coordinate over `t ∈ [0, 1]`.
#[derive(Clone, Debug, PartialEq)]
pub enum Trajectory {
    Const(Complex64),
    Line(Complex64, Complex64),
    /// `center + radius·e^{iθ}` with `θ` running linearly from `from` to `to`.
    Arc { center: Complex64, radius: f64, from: f64, to: f64 },
}

impl Trajectory {
    pub fn position(&self, t: f64) -> Complex64 {
        match *self {
            Trajectory::Const(c) => c,
            Trajectory::Line(a, b) => a + (b - a) * t,
            Trajectory::Arc { center, radius, from, to } => {
                center + unit(from + (to - from) * t) * radius
            }
        }
    }

    pub fn velocity(&self, t: f64) -> Complex64 {
        match *self {
            Trajectory::Const(_) => Complex64::new(0.0, 0.0),
            Trajectory::Line(a, b) => b - a,
            Trajectory::Arc { radius, from, to, .. } => {
                let th = from + (to - from) * t;
                Complex64::new(0.0, to - from) * unit(th) * radius
            }
        }
    }
}

/// One piece of a path: a trajectory for every coordinate.
#[derive(Clone, Debug, PartialEq)]
pub struct Segment {
    pub coords: Vec<Trajectory>,
}

impl Segment {
    pub fn new(coords: Vec<Trajectory>) -> Self {
        Segment { coords }
    }

    pub fn position(&self, t: f64) -> Vec<Complex64> {
        self.coords.iter().map(|c| c.position(t)).collect()
    }

    pub fn velocity(&self, t: f64) -> Vec<Complex64> {
        self.coords.iter().map(|c| c.velocity(t)).collect()
    }
}

/// A closed loop in the configuration space modulo the end permutation `tau`:
/// the endpoint satisfies `end[k] = start[tau[k]]`.
#[derive(Clone, Debug, PartialEq)]
pub struct LoopPath {
    chart: Chart,
    segments: Vec<Segment>,
    tau: Vec<usize>,
    note: Option<String>,
}

impl LoopPath {
    /// Checks shapes, continuity at joins and the endpoint condition.
    pub fn new(chart: Chart, segments: Vec<Segment>, tau: Vec<usize>) -> Result<Self> {
        let n = tau.len();
        if segments.is_empty() {
            return Err(MonoError::Discontinuous("path has no segments".into()));
        }
        if let Some(i) = segments.iter().position(|s| s.coords.len() != n) {
            return Err(MonoError::Discontinuous(format!("segment {i} has the wrong number of coordinates")));
        }
        let mut sorted = tau.clone();
        sorted.sort_unstable();
        if sorted != (0..n).collect::<Vec<_>>() {
            return Err(MonoError::Discontinuous("end permutation is not a permutation".into()));
        }
        for i in 1..segments.len() {
            let a = segments[i - 1].position(1.0);
            let b = segments[i].position(0.0);
            let gap = a.iter().zip(&b).map(|(x, y)| (x - y).norm()).fold(0.0, f64::max);
            if gap > JOIN_TOL {
                return Err(MonoError::Discontinuous(format!("gap {gap:.3e} between segments {} and {i}", i - 1)));
            }
        }
        let path = LoopPath { chart, segments, tau, note: None };
        let start = path.start();
        let end = path.end();
        let off = (0..n).map(|k| path.endpoint_gap(end[k], start[path.tau[k]])).fold(0.0, f64::max);
        if off > JOIN_TOL {
            return Err(MonoError::Endpoint(off));
        }
        Ok(path)
    }

    fn endpoint_gap(&self, a: Complex64, b: Complex64) -> f64 {
        match self.chart {
            Chart::Z => (a - b).norm(),
            Chart::U => lattice_distance(a - b),
        }
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }

    /// Warning attached when the loop deviates from its nominal geometry.
    pub fn note(&self) -> Option<&str> {
        self.note.as_deref()
    }

    pub fn chart(&self) -> Chart {
        self.chart
    }

    pub fn segments(&self) -> &[Segment] {
        &self.segments
    }

    pub fn tau(&self) -> &[usize] {
        &self.tau
    }

    pub fn n(&self) -> usize {
        self.tau.len()
    }

    pub fn start(&self) -> Vec<Complex64> {
        self.segments[0].position(0.0)
    }

    pub fn end(&self) -> Vec<Complex64> {
        self.segments.last().expect("nonempty").position(1.0)
    }

    /// Smallest pairwise separation (and distance to the origin in the
    /// z-chart) over `samples + 1` points per segment, with the segment index.
    pub fn min_clearance(&self, samples: usize) -> (f64, usize) {
        let mut best = (f64::INFINITY, 0);
        for (si, seg) in self.segments.iter().enumerate() {
            for s in 0..=samples {
                let p = seg.position(s as f64 / samples as f64);
                for k in 0..p.len() {
                    if self.chart == Chart::Z && p[k].norm() < best.0 {
                        best = (p[k].norm(), si);
                    }
                    for j in 0..k {
                        let d = self.endpoint_gap(p[k], p[j]);
                        if d < best.0 {
                            best = (d, si);
                        }
                    }
                }
            }
        }
        best
    }

    pub fn check_clearance(&self, delta: f64) -> Result<()> {
        let (found, segment) = self.min_clearance(CLEARANCE_SAMPLES);
        if found < delta {
            return Err(MonoError::Clearance { segment, found, required: delta });
        }
        Ok(())
    }
}
