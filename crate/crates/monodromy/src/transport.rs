use supercore::{CMat, GradedMatrix};

use crate::config::Chart;
use crate::connection::Connection;
use crate::error::{MonoError, Result};
use crate::path::{LoopPath, Segment};

/// Integrator settings.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct TransportParams {
    pub abs_tol: f64,
    pub rel_tol: f64,
    pub max_step: f64,
    /// Repeat with halved `max_step` and tolerances divided by 10, and fail if
    /// the result moves by more than `10·abs_tol`.
    pub validate: bool,
}

impl Default for TransportParams {
    fn default() -> Self {
        TransportParams { abs_tol: 1e-10, rel_tol: 1e-10, max_step: 0.05, validate: true }
    }
}

const MIN_STEP: f64 = 1e-12;

// Dormand–Prince 5(4) tableau.
const C: [f64; 7] = [0.0, 1.0 / 5.0, 3.0 / 10.0, 4.0 / 5.0, 8.0 / 9.0, 1.0, 1.0];
const A: [[f64; 6]; 7] = [
    [0.0; 6],
    [1.0 / 5.0, 0.0, 0.0, 0.0, 0.0, 0.0],
    [3.0 / 40.0, 9.0 / 40.0, 0.0, 0.0, 0.0, 0.0],
    [44.0 / 45.0, -56.0 / 15.0, 32.0 / 9.0, 0.0, 0.0, 0.0],
    [19372.0 / 6561.0, -25360.0 / 2187.0, 64448.0 / 6561.0, -212.0 / 729.0, 0.0, 0.0],
    [9017.0 / 3168.0, -355.0 / 33.0, 46732.0 / 5247.0, 49.0 / 176.0, -5103.0 / 18656.0, 0.0],
    [35.0 / 384.0, 0.0, 500.0 / 1113.0, 125.0 / 192.0, -2187.0 / 6784.0, 11.0 / 84.0],
];
const B5: [f64; 7] = [35.0 / 384.0, 0.0, 500.0 / 1113.0, 125.0 / 192.0, -2187.0 / 6784.0, 11.0 / 84.0, 0.0];
const B4: [f64; 7] = [
    5179.0 / 57600.0,
    0.0,
    7571.0 / 16695.0,
    393.0 / 640.0,
    -92097.0 / 339200.0,
    187.0 / 2100.0,
    1.0 / 40.0,
];

fn max_abs(m: &CMat) -> f64 {
    m.iter().map(|z| z.norm()).fold(0.0, f64::max)
}

fn coefficient(conn: &dyn Connection, chart: Chart, seg: &Segment, t: f64) -> Result<CMat> {
    conn.coefficient(chart, &seg.position(t), &seg.velocity(t))
}

/// Integrates `Φ' = B(t)Φ` across one segment starting from `phi`.
fn integrate_segment(
    conn: &dyn Connection,
    chart: Chart,
    seg: &Segment,
    mut phi: CMat,
    p: &TransportParams,
) -> Result<CMat> {
    let mut t = 0.0;
    let mut step = p.max_step.min(0.01);
    let mut k1 = &coefficient(conn, chart, seg, 0.0)? * &phi;
    while t < 1.0 {
        step = step.min(1.0 - t).min(p.max_step);
        if step < MIN_STEP {
            return Err(MonoError::StepUnderflow(t));
        }
        let mut k: Vec<CMat> = Vec::with_capacity(7);
        k.push(k1.clone());
        for s in 1..7 {
            let mut y = phi.clone();
            for (i, ki) in k.iter().enumerate() {
                if A[s][i] != 0.0 {
                    y += ki * supercore::c64(step * A[s][i], 0.0);
                }
            }
            let b = coefficient(conn, chart, seg, t + C[s] * step)?;
            k.push(&b * &y);
        }
        let mut y5 = phi.clone();
        let mut err = CMat::zeros(phi.nrows(), phi.ncols());
        for i in 0..7 {
            if B5[i] != 0.0 {
                y5 += &k[i] * supercore::c64(step * B5[i], 0.0);
            }
            err += &k[i] * supercore::c64(step * (B5[i] - B4[i]), 0.0);
        }
        let scale = p.abs_tol + p.rel_tol * max_abs(&phi).max(max_abs(&y5));
        let ratio = max_abs(&err) / scale;
        if ratio <= 1.0 {
            t += step;
            phi = y5;
            // first-same-as-last: stage 7 is evaluated at the accepted point
            k1 = k.pop().expect("seven stages");
        }
        let factor = if ratio == 0.0 { 5.0 } else { (0.9 * ratio.powf(-0.2)).clamp(0.2, 5.0) };
        step *= factor;
    }
    Ok(phi)
}

fn run(conn: &dyn Connection, chart: Chart, segments: &[Segment], p: &TransportParams) -> Result<CMat> {
    let dim = conn.space().dim();
    let mut phi = CMat::identity(dim, dim);
    for seg in segments {
        phi = integrate_segment(conn, chart, seg, phi, p)?;
    }
    Ok(phi)
}

/// Fundamental solution `Φ(1)` with `Φ(0) = I` along `path`.
pub fn transport(conn: &dyn Connection, path: &LoopPath, params: &TransportParams) -> Result<GradedMatrix> {
    transport_open(conn, path.chart(), path.segments(), params)
}

/// As [`transport`], along segments that need not close up.
pub fn transport_open(
    conn: &dyn Connection,
    chart: Chart,
    segments: &[Segment],
    params: &TransportParams,
) -> Result<GradedMatrix> {
    let phi = run(conn, chart, segments, params)?;
    if params.validate {
        let fine = TransportParams {
            abs_tol: params.abs_tol / 10.0,
            rel_tol: params.rel_tol / 10.0,
            max_step: params.max_step / 2.0,
            validate: false,
        };
        let check = run(conn, chart, segments, &fine)?;
        let moved = max_abs(&(&check - &phi));
        let limit = 10.0 * params.abs_tol;
        if moved > limit {
            return Err(MonoError::ToleranceNotMet { moved, limit });
        }
    }
    Ok(GradedMatrix::endo(conn.space(), phi)?)
}
