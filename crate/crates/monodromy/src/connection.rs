use std::f64::consts::PI;

use bialgebra::{classical_r, AlgebraSpec, Representation};
use supercore::{
    flip_terms, place_pair, place_single, CMat, Complex64, GradedMatrix, PureTensor, SuperSpace,
};

use crate::config::{lattice_distance, Chart, ConfigPoint};
use crate::error::{MonoError, Result};

/// Minimum distance from a pole accepted by evaluations.
pub const POLE_GUARD: f64 = 1e-8;

/// Trigonometric KZ (`r(u)` plus `s`) or rational KZ (`Ω/(z_k − z_j)`).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Kind {
    Trig,
    Rational,
}

fn c(x: f64) -> Complex64 {
    Complex64::new(x, 0.0)
}

/// `h/2πi`.
fn prefactor(h: Complex64) -> Complex64 {
    h / Complex64::new(0.0, 2.0 * PI)
}

fn complex(m: GradedMatrix) -> CMat {
    m.complex().expect("complex mode").clone()
}

/// `r(u) = (r_{21} e^u + r)/(e^u − 1)` on `V ⊗ V`.
pub fn trig_r_eval(terms: &[PureTensor], space: &SuperSpace, u: Complex64) -> Result<GradedMatrix> {
    if lattice_distance(u) < POLE_GUARD {
        return Err(MonoError::Pole(format!("u = {u}")));
    }
    let spaces = [space.clone(), space.clone()];
    let r = place_pair(terms, 1, 2, &spaces)?;
    let r21 = place_pair(terms, 2, 1, &spaces)?;
    let x = u.exp();
    Ok(r21.scale_complex(x / (x - 1.0)).try_add(&r.scale_complex(1.0 / (x - 1.0)))?)
}

/// Placed operators of the KZ system on `V^{⊗n}`.
#[derive(Clone, Debug)]
pub struct KzSystem {
    n: usize,
    kind: Kind,
    h: Complex64,
    slot: SuperSpace,
    full: SuperSpace,
    /// `r_{kj}`, `r21_{kj}` and `Ω_{kj}` at index `k·n + j`.
    r: Vec<CMat>,
    r21: Vec<CMat>,
    omega: Vec<CMat>,
    s: Vec<CMat>,
}

impl KzSystem {
    /// System from explicit r-matrix summands and `s` on a single space.
    pub fn from_terms(
        n: usize,
        kind: Kind,
        h: Complex64,
        terms: &[PureTensor],
        space: &SuperSpace,
        s: &GradedMatrix,
    ) -> Result<Self> {
        let spaces = vec![space.clone(); n];
        let full = SuperSpace::tensor_all(&spaces)?;
        let dim = full.dim();
        let zero = CMat::zeros(dim, dim);
        let mut r = vec![zero.clone(); n * n];
        let mut r21 = vec![zero.clone(); n * n];
        let mut omega = vec![zero; n * n];
        let flipped = flip_terms(terms);
        for k in 0..n {
            for j in 0..n {
                if j == k {
                    continue;
                }
                let i = k * n + j;
                r[i] = complex(place_pair(terms, k + 1, j + 1, &spaces)?);
                r21[i] = complex(place_pair(&flipped, k + 1, j + 1, &spaces)?);
                omega[i] = &r[i] + &r21[i];
            }
        }
        let s = (1..=n).map(|k| Ok(complex(place_single(s, k, &spaces)?))).collect::<Result<_>>()?;
        Ok(KzSystem { n, kind, h, slot: space.clone(), full, r, r21, omega, s })
    }

    /// System for an algebra with one representation in every slot.
    pub fn new(
        n: usize,
        kind: Kind,
        h: Complex64,
        spec: &AlgebraSpec,
        rep: &Representation,
        s: &GradedMatrix,
    ) -> Result<Self> {
        let r = classical_r(spec, rep, rep)?;
        Self::from_terms(n, kind, h, &r.terms, &rep.space, s)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn kind(&self) -> Kind {
        self.kind
    }

    pub fn h(&self) -> Complex64 {
        self.h
    }

    /// `V^{⊗n}`.
    pub fn space(&self) -> &SuperSpace {
        &self.full
    }

    /// The space on each strand.
    pub fn slot_space(&self) -> &SuperSpace {
        &self.slot
    }

    pub fn dim(&self) -> usize {
        self.full.dim()
    }

    fn check_point(&self, p: &ConfigPoint) -> Result<()> {
        if p.n() != self.n {
            return Err(MonoError::InvalidGenerator(format!("point has {} coordinates, system has {}", p.n(), self.n)));
        }
        Ok(())
    }

    /// `A_k` for 0-based `k` with `x_j = e^{u_k − u_j}` (trig) or `z_k − z_j` (rational) supplied.
    fn a_raw(&self, k: usize, x: &dyn Fn(usize) -> Complex64) -> Result<CMat> {
        let mut m = match self.kind {
            Kind::Trig => self.s[k].clone(),
            Kind::Rational => CMat::zeros(self.dim(), self.dim()),
        };
        for j in 0..self.n {
            if j == k {
                continue;
            }
            let i = k * self.n + j;
            let xj = x(j);
            match self.kind {
                Kind::Trig => {
                    if (xj - 1.0).norm() < POLE_GUARD {
                        return Err(MonoError::Pole(format!("u_{} - u_{}", k + 1, j + 1)));
                    }
                    let d = 1.0 / (xj - 1.0);
                    m += &self.r21[i] * (xj * d) + &self.r[i] * d;
                }
                Kind::Rational => {
                    if xj.norm() < POLE_GUARD {
                        return Err(MonoError::Pole(format!("z_{} - z_{}", k + 1, j + 1)));
                    }
                    m += &self.omega[i] * (1.0 / xj);
                }
            }
        }
        Ok(m * prefactor(self.h))
    }

    fn differences(&self, p: &ConfigPoint, k: usize) -> impl Fn(usize) -> Complex64 {
        let p = match self.kind {
            Kind::Trig => p.clone(),
            Kind::Rational => p.to_z(),
        };
        let kind = self.kind;
        move |j| match kind {
            Kind::Trig => p.ratio(k, j),
            Kind::Rational => p.coords()[k] - p.coords()[j],
        }
    }

    /// Connection component `A_k` at a point, `k` 1-based.
    pub fn connection(&self, k: usize, p: &ConfigPoint) -> Result<GradedMatrix> {
        self.check_point(p)?;
        if k == 0 || k > self.n {
            return Err(MonoError::InvalidGenerator(format!("connection index {k}")));
        }
        let a = self.a_raw(k - 1, &self.differences(p, k - 1))?;
        Ok(GradedMatrix::endo(&self.full, a)?)
    }

    /// `∂A_k/∂u_j` (trig) or `∂A_k/∂z_j` (rational) for `j ≠ k`, 0-based.
    fn d_a(&self, k: usize, j: usize, p: &ConfigPoint) -> CMat {
        let i = k * self.n + j;
        let x = self.differences(p, k)(j);
        let coeff = match self.kind {
            // -r'(u) = Ω e^u / (e^u - 1)^2
            Kind::Trig => x / ((x - 1.0) * (x - 1.0)),
            Kind::Rational => 1.0 / (x * x),
        };
        &self.omega[i] * (coeff * prefactor(self.h))
    }

    /// `max_{j<k} ‖∂_j A_k − ∂_k A_j + [A_k, A_j]‖` (entrywise max).
    pub fn flatness_residual(&self, p: &ConfigPoint) -> Result<f64> {
        self.check_point(p)?;
        let a: Vec<CMat> = (0..self.n).map(|k| self.a_raw(k, &self.differences(p, k))).collect::<Result<_>>()?;
        let mut worst: f64 = 0.0;
        for k in 0..self.n {
            for j in 0..k {
                let curv = self.d_a(k, j, p) - self.d_a(j, k, p) + &a[k] * &a[j] - &a[j] * &a[k];
                worst = worst.max(curv.iter().map(|z| z.norm()).fold(0.0, f64::max));
            }
        }
        Ok(worst)
    }
}

/// Coefficient `B(t)` of the matrix ODE `Φ' = BΦ` along a path.
pub trait Connection: Sync {
    fn space(&self) -> &SuperSpace;
    fn coefficient(&self, chart: Chart, pos: &[Complex64], vel: &[Complex64]) -> Result<CMat>;
}

impl Connection for KzSystem {
    fn space(&self) -> &SuperSpace {
        &self.full
    }

    fn coefficient(&self, chart: Chart, pos: &[Complex64], vel: &[Complex64]) -> Result<CMat> {
        let n = self.n;
        let mut b = CMat::zeros(self.dim(), self.dim());
        // velocities in the chart the connection is written in: u for trig, z for rational
        let dv: Vec<Complex64> = match (self.kind, chart) {
            (Kind::Trig, Chart::U) | (Kind::Rational, Chart::Z) => vel.to_vec(),
            (Kind::Trig, Chart::Z) => vel.iter().zip(pos).map(|(v, z)| v / z).collect(),
            (Kind::Rational, Chart::U) => vel.iter().zip(pos).map(|(v, u)| v * u.exp()).collect(),
        };
        let diff = |k: usize, j: usize| match (self.kind, chart) {
            (Kind::Trig, Chart::U) => (pos[k] - pos[j]).exp(),
            (Kind::Trig, Chart::Z) => pos[k] / pos[j],
            (Kind::Rational, Chart::Z) => pos[k] - pos[j],
            (Kind::Rational, Chart::U) => pos[k].exp() - pos[j].exp(),
        };
        for k in 0..n {
            if dv[k] == c(0.0) {
                continue;
            }
            b += self.a_raw(k, &|j| diff(k, j))? * dv[k];
        }
        Ok(b)
    }
}
