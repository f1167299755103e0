use std::f64::consts::PI;

use supercore::Complex64;

use crate::braid::Generator;
use crate::config::Chart;
use crate::error::Result;
use crate::path::{LoopPath, Segment, Trajectory, DEFAULT_CLEARANCE};

fn re(x: f64) -> Complex64 {
    Complex64::new(x, 0.0)
}

fn fixed(n: usize) -> Vec<Trajectory> {
    (1..=n).map(|k| Trajectory::Const(re(k as f64))).collect()
}

/// End permutation of a generator loop (0-based images).
pub fn end_permutation(g: Generator, n: usize) -> Vec<usize> {
    let mut tau: Vec<usize> = (0..n).collect();
    if let Generator::B(j) = g {
        tau.swap(j - 1, j);
    }
    tau
}

fn exchange(j: usize, n: usize) -> Result<LoopPath> {
    let c = re(j as f64 + 0.5);
    let mut coords = fixed(n);
    coords[j - 1] = Trajectory::Arc { center: c, radius: 0.5, from: PI, to: 2.0 * PI };
    coords[j] = Trajectory::Arc { center: c, radius: 0.5, from: 0.0, to: PI };
    LoopPath::new(Chart::Z, vec![Segment::new(coords)], end_permutation(Generator::B(j), n))
}

fn circle(j: usize, n: usize, radius: f64) -> Result<LoopPath> {
    let mut coords = fixed(n);
    coords[j - 1] = Trajectory::Arc { center: re(0.0), radius, from: 0.0, to: 2.0 * PI };
    if radius != j as f64 {
        // move out to the circle and back along the real axis
        let out = Segment::new({
            let mut c = fixed(n);
            c[j - 1] = Trajectory::Line(re(j as f64), re(radius));
            c
        });
        let back = Segment::new({
            let mut c = fixed(n);
            c[j - 1] = Trajectory::Line(re(radius), re(j as f64));
            c
        });
        return LoopPath::new(Chart::Z, vec![out, Segment::new(coords), back], (0..n).collect());
    }
    LoopPath::new(Chart::Z, vec![Segment::new(coords)], (0..n).collect())
}

/// Standard loop based at `(1, …, n)` in the z-chart. `b_j` exchanges strands
/// `j` and `j+1` along a radius-½ circle with `z_{j+1}` passing above; `X_j`
/// sends `z_j` once counterclockwise around `|z| = j`. If the circle misses the
/// clearance bound its radius is moved by `±0.2` and a note is attached.
pub fn generator_loop(g: Generator, n: usize) -> Result<LoopPath> {
    g.check(n)?;
    match g {
        Generator::B(j) => exchange(j, n),
        Generator::X(j) => {
            let nominal = circle(j, n, j as f64)?;
            if nominal.check_clearance(DEFAULT_CLEARANCE).is_ok() {
                return Ok(nominal);
            }
            for dr in [0.2, -0.2] {
                let p = circle(j, n, j as f64 + dr)?;
                if p.check_clearance(DEFAULT_CLEARANCE).is_ok() {
                    return Ok(p.with_note(format!("X{j}: radius moved to {} for clearance", j as f64 + dr)));
                }
            }
            Ok(nominal)
        }
    }
}

/// A second representative of `b_j`: straight moves to `j + 0.1` and
/// `j + 0.9`, a radius-0.4 half turn, and straight moves back out.
pub fn exchange_loop_alt(j: usize, n: usize) -> Result<LoopPath> {
    Generator::B(j).check(n)?;
    let (a, b) = (j as f64, j as f64 + 1.0);
    let c = re(a + 0.5);
    let seg = |left: Trajectory, right: Trajectory| {
        let mut coords = fixed(n);
        coords[j - 1] = left;
        coords[j] = right;
        Segment::new(coords)
    };
    let segments = vec![
        seg(Trajectory::Line(re(a), re(a + 0.1)), Trajectory::Line(re(b), re(b - 0.1))),
        seg(
            Trajectory::Arc { center: c, radius: 0.4, from: PI, to: 2.0 * PI },
            Trajectory::Arc { center: c, radius: 0.4, from: 0.0, to: PI },
        ),
        seg(Trajectory::Line(re(b - 0.1), re(b)), Trajectory::Line(re(a + 0.1), re(a))),
    ];
    LoopPath::new(Chart::Z, segments, end_permutation(Generator::B(j), n))
}
