use std::path::PathBuf;
use std::time::Instant;

use clap::{Parser, Subcommand};
use monodromy::{monodromy_rep, BraidWord, TransportParams};
use serde::Serialize;
use serde_json::json;
use supercore::{GradedMatrix, Mode, Scalar, Series};

use crate::checks;
use crate::complex::{format_complex, parse_complex};
use crate::config::SuiteConfig;
use crate::error::{HarnessError, Result};
use crate::report::{digest, Format, Record, Report};
use crate::suite::{load_spec, run_suite_with_jobs};

#[derive(Debug, Parser)]
#[command(name = "trigkz", version, about = "Trigonometric KZ monodromy and quantum-group verification")]
pub struct Cli {
    /// Pass threshold. For `verify` it replaces the trace tolerance of the
    /// word comparison.
    #[arg(long, global = true)]
    pub tol: Option<f64>,
    /// Write output here instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    #[arg(long, global = true, default_value = "json", value_parser = ["json", "csv"])]
    pub format: String,
    /// Worker threads; defaults to the number of processors.
    #[arg(long, global = true)]
    pub jobs: Option<usize>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Validate the Lie superbialgebra axioms of an algebra.
    CheckAlgebra {
        #[arg(long)]
        algebra: String,
    },
    /// Evaluate the universal R-matrix in a representation.
    RMatrix {
        #[arg(long)]
        algebra: String,
        #[arg(long, default_value = "vector")]
        rep: String,
        #[arg(long, allow_hyphen_values = true)]
        h: Option<String>,
        /// Work with truncated series in h to this order instead of a number.
        #[arg(long)]
        series: Option<usize>,
    },
    /// Evaluate a braid word in the numeric monodromy representation.
    Monodromy {
        #[arg(long)]
        algebra: String,
        #[arg(long, default_value = "vector")]
        rep: String,
        #[arg(long)]
        n: usize,
        #[arg(long, allow_hyphen_values = true)]
        h: String,
        /// Comma-separated Cartan coefficients of s.
        #[arg(long, allow_hyphen_values = true, default_value = "")]
        s: String,
        /// For example `b1 b2' X1`; a trailing apostrophe inverts a letter.
        #[arg(long, allow_hyphen_values = true)]
        word: String,
    },
    /// Run the full suite described by a config file.
    Verify {
        #[arg(long)]
        config: PathBuf,
    },
}

/// Output of the matrix-valued subcommands.
#[derive(Serialize)]
struct MatrixOutput {
    /// Coefficient matrices (one per power of h in series mode), as `[re, im]` entries.
    matrices: Vec<Vec<Vec<[f64; 2]>>>,
    report: Report,
}

fn dump(m: &GradedMatrix) -> Vec<Vec<Vec<[f64; 2]>>> {
    m.coeffs()
        .iter()
        .map(|c| (0..c.nrows()).map(|i| (0..c.ncols()).map(|j| [c[(i, j)].re, c[(i, j)].im]).collect()).collect())
        .collect()
}

fn record(id: &str, inputs: serde_json::Value, residual: f64, tolerance: f64, start: Instant) -> Record {
    Record {
        id: id.into(),
        digest: digest(id, &inputs),
        residual,
        tolerance,
        pass: residual < tolerance,
        wall_time: start.elapsed().as_secs_f64(),
        note: None,
    }
}

fn parse_floats(text: &str) -> Result<Vec<f64>> {
    text.split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| t.parse().map_err(|_| HarnessError::Config(format!("cannot parse {t:?} as a number"))))
        .collect()
}

enum Output {
    Report(Report),
    Matrix(MatrixOutput),
}

fn execute(cli: &Cli) -> Result<Output> {
    match &cli.command {
        Command::CheckAlgebra { algebra } => {
            let (spec, _) = load_spec(algebra)?;
            let tol = cli.tol.unwrap_or(bialgebra::LOAD_TOLERANCE);
            let start = Instant::now();
            let validation = bialgebra::validate_spec(&spec, tol)?;
            let mut report = Report::new(json!({ "algebra": algebra, "tol": tol }));
            for c in &validation.checks {
                let mut r = record(&format!("axiom:{}", c.name), json!({ "algebra": algebra }), c.residual, tol, start);
                r.note = c.worst.clone();
                report.push(r);
            }
            Ok(Output::Report(report))
        }
        Command::RMatrix { algebra, rep, h, series } => {
            let (spec, builtin) = load_spec(algebra)?;
            if !builtin {
                return Err(HarnessError::Config(format!("no Hopf tables for {algebra}")));
            }
            let rep = spec.rep(rep).map_err(|e| HarnessError::Config(e.to_string()))?;
            let tol = cli.tol.unwrap_or(1e-12);
            let start = Instant::now();
            let mut report = Report::new(json!({ "algebra": algebra, "rep": rep.name, "h": h, "series": series, "tol": tol }));
            let matrix = match series {
                Some(order) => {
                    let hs = Scalar::from(Series::h(*order)?);
                    let hopf = qgroup::HopfPresentation::builtin(&spec.name, &hs)?;
                    let hrep = hopf.rep_images(rep)?;
                    let m = qgroup::eval_universal(&hopf, &qgroup::universal_r_for(&hopf, &hrep)?, &hrep)?;
                    if *order >= 1 {
                        let res = checks::r_first_order(&spec.name, &spec, rep)?;
                        report.push(record("r_first_order", json!({ "algebra": algebra }), res, tol, start));
                    }
                    m
                }
                None => {
                    let hv = parse_complex(h.as_deref().ok_or_else(|| HarnessError::Config("--h or --series is required".into()))?)?;
                    let res = checks::qybe(&spec.name, rep, hv)?;
                    report.push(record("qybe", json!({ "algebra": algebra, "h": format_complex(hv) }), res, tol, start));
                    checks::r_matrix(&spec.name, rep, hv)?
                }
            };
            Ok(Output::Matrix(MatrixOutput { matrices: dump(&matrix), report }))
        }
        Command::Monodromy { algebra, rep, n, h, s, word } => {
            if *n == 0 {
                return Err(HarnessError::Config("n must be at least 1".into()));
            }
            let (spec, _) = load_spec(algebra)?;
            let rep = spec.rep(rep).map_err(|e| HarnessError::Config(e.to_string()))?;
            let hv = parse_complex(h)?;
            let mut coeffs = parse_floats(s)?;
            if coeffs.is_empty() {
                coeffs = vec![0.0; spec.cartan.len()];
            }
            let sm = spec.cartan_element(rep, &coeffs).map_err(|e| HarnessError::Config(e.to_string()))?;
            let w: BraidWord = word.parse().map_err(|e: monodromy::MonoError| HarnessError::Config(e.to_string()))?;
            w.check(*n).map_err(|e| HarnessError::Config(e.to_string()))?;
            let tol = cli.tol.unwrap_or(1e-8);
            let start = Instant::now();
            let ev = monodromy_rep(*n, hv, &sm, &spec, rep, TransportParams::default())?;
            let m = ev.eval(&w)?;
            let back = m.try_compose(&ev.eval(&w.inverse())?)?;
            let res = back.distance(&GradedMatrix::identity(ev.space(), Mode::Complex))?;
            let inputs = json!({ "algebra": algebra, "n": n, "h": format_complex(hv), "s": coeffs, "word": w.to_string() });
            let mut report = Report::new(inputs.clone());
            let mut r = record("inverse_consistency", inputs, res, tol, start);
            r.note = Some(format!("trace={}", format_complex(m.trace(false)?.constant_term())));
            report.push(r);
            Ok(Output::Matrix(MatrixOutput { matrices: dump(&m), report }))
        }
        Command::Verify { config } => {
            let mut cfg = SuiteConfig::load(config)?;
            if let Some(t) = cli.tol {
                cfg.tolerances.trace = t;
            }
            if let Some(out) = &cli.out {
                cfg.output = Some(out.clone());
            }
            Ok(Output::Report(run_suite_with_jobs(&cfg, cli.jobs)?))
        }
    }
}

fn emit(cli: &Cli, output: &Output, out: Option<&PathBuf>) -> Result<i32> {
    let format: Format = cli.format.parse()?;
    let (text, code) = match output {
        Output::Report(r) => (r.render(format), r.exit_code()),
        Output::Matrix(m) => {
            let text = match format {
                Format::Json => serde_json::to_string_pretty(m).expect("output serializes"),
                Format::Csv => m.report.to_csv(),
            };
            (text, m.report.exit_code())
        }
    };
    match out {
        Some(path) => std::fs::write(path, text).map_err(|e| HarnessError::Io(format!("{}: {e}", path.display())))?,
        None => {
            use std::io::Write;
            let mut out = std::io::stdout().lock();
            let _ = writeln!(out, "{text}");
        }
    }
    Ok(code)
}

/// Runs a parsed command line and returns the process exit status.
pub fn run(cli: &Cli) -> i32 {
    if let Some(j) = cli.jobs {
        if j == 0 {
            eprintln!("error: --jobs must be at least 1");
            return 2;
        }
    }
    let result = execute(cli).and_then(|output| {
        let out = match (&cli.command, &output) {
            (Command::Verify { .. }, Output::Report(r)) => r
                .config
                .get("output")
                .and_then(|v| v.as_str())
                .map(PathBuf::from)
                .or_else(|| cli.out.clone()),
            _ => cli.out.clone(),
        };
        emit(cli, &output, out.as_ref())
    });
    match result {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}
