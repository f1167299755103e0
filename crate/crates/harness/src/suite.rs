use std::path::Path;
use std::sync::Arc;
use std::time::Instant;

use bialgebra::{builtin_algebra, parse_algebra, AlgebraSpec, Representation, BUILTIN_NAMES};
use monodromy::{monodromy_rep, TransportParams, WordEvaluator};
use qgroup::{algebraic_rep, Convention, HopfPresentation};
use rayon::prelude::*;
use serde_json::json;
use supercore::{Complex64, GradedMatrix, Scalar};

use crate::checks;
use crate::compare::{compare_word_evaluators, CompareTol};
use crate::complex::format_complex;
use crate::config::SuiteConfig;
use crate::error::{HarnessError, Result};
use crate::report::{digest, Record, Report};

/// Random sample sizes used by the point-sampled checks.
pub const TRIG_SAMPLES: usize = 20;
pub const FLATNESS_SAMPLES: usize = 10;

/// Resolves a built-in name or reads a spec file without checking axioms.
pub fn load_spec(algebra: &str) -> Result<(AlgebraSpec, bool)> {
    if BUILTIN_NAMES.contains(&algebra) {
        return Ok((builtin_algebra(algebra)?, true));
    }
    let path = Path::new(algebra);
    let text = std::fs::read_to_string(path).map_err(|e| HarnessError::Io(format!("{}: {e}", path.display())))?;
    Ok((parse_algebra(&text)?, false))
}

/// Algebra, representation and `s` resolved from a config.
pub struct Resolved {
    pub spec: AlgebraSpec,
    pub builtin: bool,
    pub rep: Representation,
    pub s_coeffs: Vec<f64>,
    pub s: GradedMatrix,
    pub h: Vec<Complex64>,
}

pub fn resolve(config: &SuiteConfig) -> Result<Resolved> {
    config.validate()?;
    let (spec, builtin) = load_spec(&config.algebra)?;
    let rep = spec
        .rep(&config.rep)
        .map_err(|_| HarnessError::Config(format!("algebra {} has no representation {}", spec.name, config.rep)))?
        .clone();
    let s_coeffs = if config.s.is_empty() { vec![0.0; spec.cartan.len()] } else { config.s.clone() };
    if s_coeffs.len() != spec.cartan.len() {
        return Err(HarnessError::Config(format!(
            "s has {} coefficients, the algebra declares {} Cartan generators",
            s_coeffs.len(),
            spec.cartan.len()
        )));
    }
    let s = spec.cartan_element(&rep, &s_coeffs)?;
    Ok(Resolved { spec, builtin, rep, s_coeffs, s, h: config.h_values()? })
}

type CheckFn<'a> = Box<dyn Fn() -> Result<(f64, Option<String>)> + Send + Sync + 'a>;

struct Task<'a> {
    id: String,
    inputs: serde_json::Value,
    tolerance: f64,
    run: CheckFn<'a>,
}

fn execute(task: &Task) -> Record {
    let start = Instant::now();
    let outcome = (task.run)();
    let wall_time = start.elapsed().as_secs_f64();
    let (residual, note) = match outcome {
        Ok((r, note)) => (r, note),
        Err(e) => (f64::MAX, Some(e.to_string())),
    };
    Record {
        id: task.id.clone(),
        digest: digest(&task.id, &task.inputs),
        residual,
        tolerance: task.tolerance,
        pass: residual < task.tolerance,
        wall_time,
        note,
    }
}

fn evaluator(e: &Arc<Result<WordEvaluator>>) -> Result<&WordEvaluator> {
    e.as_ref().as_ref().map_err(|err| HarnessError::Config(err.to_string()))
}

fn plain(r: Result<f64>) -> Result<(f64, Option<String>)> {
    r.map(|x| (x, None))
}

/// Runs every check in order. Configuration problems are returned as errors;
/// check failures are recorded in the report.
pub fn run_suite(config: &SuiteConfig) -> Result<Report> {
    let res = resolve(config)?;
    let mut report = Report::new(serde_json::to_value(config).expect("config serializes"));
    let tol = &config.tolerances;
    let params: TransportParams = config.integrator.into();
    let (spec, rep, s) = (&res.spec, &res.rep, &res.s);
    let base = json!({ "algebra": spec.name, "rep": rep.name, "s": res.s_coeffs });

    let validation = Task {
        id: "spec_validation".into(),
        inputs: json!({ "algebra": config.algebra }),
        tolerance: tol.classical,
        run: Box::new(|| checks::classical_axioms(spec, tol.classical).map(|(r, _)| (r, None))),
    };
    let record = execute(&validation);
    let ok = record.pass;
    report.push(record);
    if !ok {
        return Ok(report);
    }

    let name = spec.name.clone();
    let n = config.n;
    let seed = config.seed;
    let mut tasks: Vec<Task> = vec![
        Task {
            id: "cybe".into(),
            inputs: base.clone(),
            tolerance: tol.classical,
            run: Box::new(|| plain(checks::cybe(spec, rep))),
        },
        Task {
            id: "s_compatibility".into(),
            inputs: base.clone(),
            tolerance: tol.classical.max(monodromy::COMPATIBILITY_TOL),
            run: Box::new(|| plain(checks::s_compatibility(spec, rep, s))),
        },
        Task {
            id: "trig_unitarity".into(),
            inputs: json!({ "base": base, "samples": TRIG_SAMPLES, "seed": seed }),
            tolerance: tol.trig,
            run: Box::new(move || plain(checks::trig_unitarity(spec, rep, TRIG_SAMPLES, seed))),
        },
        Task {
            id: "spectral_cybe".into(),
            inputs: json!({ "base": base, "samples": TRIG_SAMPLES, "seed": seed }),
            tolerance: tol.trig,
            run: Box::new(move || plain(checks::spectral_cybe(spec, rep, TRIG_SAMPLES, seed))),
        },
    ];
    for &h in &res.h {
        tasks.push(Task {
            id: format!("flatness[h={}]", format_complex(h)),
            inputs: json!({ "base": base, "n": n, "h": [h.re, h.im], "samples": FLATNESS_SAMPLES, "seed": seed }),
            tolerance: tol.flatness,
            run: Box::new(move || plain(checks::flatness(spec, rep, s, n.max(2), h, FLATNESS_SAMPLES, seed))),
        });
    }

    let quantum = res.builtin;
    let hq = |id: &str, h: Complex64| format!("{id}[h={}]", format_complex(h));
    if quantum {
        let nm = name.clone();
        tasks.push(Task {
            id: "r_first_order".into(),
            inputs: base.clone(),
            tolerance: tol.quantum,
            run: Box::new(move || plain(checks::r_first_order(&nm, spec, rep))),
        });
    }
    // Numeric evaluators are shared between the relation and comparison checks.
    let numeric: Vec<Arc<Result<WordEvaluator>>> =
        res.h.iter().map(|&h| Arc::new(monodromy_rep(n, h, s, spec, rep, params).map_err(HarnessError::from))).collect();
    let algebraic: Vec<Arc<Result<WordEvaluator>>> = res
        .h
        .iter()
        .map(|&h| {
            Arc::new(if quantum {
                HopfPresentation::builtin(&name, &Scalar::from(h))
                    .and_then(|hopf| algebraic_rep(&hopf, spec, rep, n, &res.s_coeffs, Convention::Corrected))
                    .map_err(HarnessError::from)
            } else {
                Err(HarnessError::Config("no Hopf tables".into()))
            })
        })
        .collect();

    for (k, &h) in res.h.iter().enumerate() {
        let hin = json!({ "base": base, "n": n, "h": [h.re, h.im] });
        if quantum {
            let (n1, n2, n3) = (name.clone(), name.clone(), name.clone());
            tasks.push(Task {
                id: hq("qybe", h),
                inputs: hin.clone(),
                tolerance: tol.quantum,
                run: Box::new(move || plain(checks::qybe(&n1, rep, h))),
            });
            tasks.push(Task {
                id: hq("hexagon", h),
                inputs: hin.clone(),
                tolerance: tol.hexagon,
                run: Box::new(move || plain(checks::hexagon(&n2, rep, h, n.min(3)))),
            });
            tasks.push(Task {
                id: hq("drinfeld_u", h),
                inputs: hin.clone(),
                tolerance: tol.drinfeld_u,
                run: Box::new(move || plain(checks::drinfeld_u_identity(&n3, spec, rep, h))),
            });
            let alg = algebraic[k].clone();
            tasks.push(Task {
                id: hq("algebraic_relations", h),
                inputs: hin.clone(),
                tolerance: tol.algebraic_relations,
                run: Box::new(move || plain(checks::relations(evaluator(&alg)?))),
            });
        }
        let num = numeric[k].clone();
        tasks.push(Task {
            id: hq("numeric_relations", h),
            inputs: json!({ "run": hin, "integrator": config.integrator }),
            tolerance: tol.numeric_relations,
            run: Box::new(move || plain(checks::relations(evaluator(&num)?))),
        });
        tasks.push(Task {
            id: hq("closed_form_n1", h),
            inputs: json!({ "run": hin, "integrator": config.integrator }),
            tolerance: tol.closed_form,
            run: Box::new(move || plain(checks::closed_form_n1(spec, rep, s, h, params))),
        });
        if quantum {
            let max_len = config.max_word_len;
            let ctol = CompareTol { trace: tol.trace, spectrum: tol.spectrum };
            let inputs = json!({ "run": hin, "integrator": config.integrator, "max_word_len": max_len });
            let (alg, num) = (algebraic[k].clone(), numeric[k].clone());
            tasks.push(Task {
                id: hq("compare_traces", h),
                inputs: inputs.clone(),
                tolerance: tol.trace,
                run: Box::new(move || {
                    let c = compare_word_evaluators(evaluator(&alg)?, evaluator(&num)?, max_len, ctol)?;
                    let mut note = format!("words={}", c.words.len());
                    if let Some(t) = &c.intertwiner {
                        note.push_str(&format!(" intertwiner_residual={:e} intertwiner_condition={:e}", t.residual, t.condition));
                    }
                    Ok((c.max_trace_difference, Some(note)))
                }),
            });
            let (alg, num) = (algebraic[k].clone(), numeric[k].clone());
            tasks.push(Task {
                id: hq("compare_spectra", h),
                inputs,
                tolerance: tol.spectrum,
                run: Box::new(move || {
                    let c = compare_word_evaluators(evaluator(&alg)?, evaluator(&num)?, 0, ctol)?;
                    Ok((c.max_spectrum_distance, None))
                }),
            });
        }
    }
    if !quantum {
        for id in ["r_first_order", "qybe", "hexagon", "drinfeld_u", "algebraic_relations", "compare_traces", "compare_spectra"] {
            report.skip(id);
        }
    }

    for record in tasks.par_iter().map(execute).collect::<Vec<_>>() {
        report.push(record);
    }
    Ok(report)
}

/// [`run_suite`] on a pool with `jobs` threads (`None`: one per processor).
pub fn run_suite_with_jobs(config: &SuiteConfig, jobs: Option<usize>) -> Result<Report> {
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(j) = jobs {
        if j == 0 {
            return Err(HarnessError::Config("--jobs must be at least 1".into()));
        }
        builder = builder.num_threads(j);
    }
    let pool = builder.build().map_err(|e| HarnessError::Config(e.to_string()))?;
    pool.install(|| run_suite(config))
}
