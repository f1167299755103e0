use std::f64::consts::PI;

use supercore::Complex64;

use crate::error::{MonoError, Result};

/// Coordinate chart: `u` values are taken mod `2πi`, `z = e^u`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Chart {
    U,
    Z,
}

/// Distance from `x` to the lattice `2πi·Z`.
pub fn lattice_distance(x: Complex64) -> f64 {
    let m = (x.im / (2.0 * PI)).round();
    (x - Complex64::new(0.0, 2.0 * PI * m)).norm()
}

/// A point of the configuration space in one chart.
#[derive(Clone, Debug, PartialEq)]
pub struct ConfigPoint {
    chart: Chart,
    coords: Vec<Complex64>,
}

impl ConfigPoint {
    pub fn new(chart: Chart, coords: Vec<Complex64>) -> Result<Self> {
        let n = coords.len();
        for k in 0..n {
            if chart == Chart::Z && coords[k].norm() == 0.0 {
                return Err(MonoError::Coincident(k + 1, 0));
            }
            for j in 0..k {
                let gap = match chart {
                    Chart::U => lattice_distance(coords[k] - coords[j]),
                    Chart::Z => (coords[k] - coords[j]).norm(),
                };
                if gap == 0.0 {
                    return Err(MonoError::Coincident(j + 1, k + 1));
                }
            }
        }
        Ok(ConfigPoint { chart, coords })
    }

    pub fn u(coords: Vec<Complex64>) -> Result<Self> {
        Self::new(Chart::U, coords)
    }

    pub fn z(coords: Vec<Complex64>) -> Result<Self> {
        Self::new(Chart::Z, coords)
    }

    /// The base point `(1, 2, …, n)` in the z-chart.
    pub fn base(n: usize) -> Self {
        ConfigPoint { chart: Chart::Z, coords: (1..=n).map(|k| Complex64::new(k as f64, 0.0)).collect() }
    }

    pub fn chart(&self) -> Chart {
        self.chart
    }

    pub fn coords(&self) -> &[Complex64] {
        &self.coords
    }

    pub fn n(&self) -> usize {
        self.coords.len()
    }

    /// Converts to the u-chart with the principal branch of the logarithm.
    pub fn to_u(&self) -> ConfigPoint {
        match self.chart {
            Chart::U => self.clone(),
            Chart::Z => ConfigPoint { chart: Chart::U, coords: self.coords.iter().map(|z| z.ln()).collect() },
        }
    }

    pub fn to_z(&self) -> ConfigPoint {
        match self.chart {
            Chart::Z => self.clone(),
            Chart::U => ConfigPoint { chart: Chart::Z, coords: self.coords.iter().map(|u| u.exp()).collect() },
        }
    }

    /// `e^{u_k - u_j}` for 0-based `k`, `j`.
    pub fn ratio(&self, k: usize, j: usize) -> Complex64 {
        match self.chart {
            Chart::U => (self.coords[k] - self.coords[j]).exp(),
            Chart::Z => self.coords[k] / self.coords[j],
        }
    }
}
