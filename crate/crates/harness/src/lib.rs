//! Verification suite for the trigonometric KZ monodromy: configuration,
//! comparison of braid-group representations, reports and the `trigkz` CLI.

pub mod checks;
pub mod cli;
pub mod compare;
pub mod complex;
pub mod config;
pub mod error;
pub mod report;
pub mod suite;
pub mod words;

pub use compare::{compare_word_evaluators, spectrum_distance, CompareTol, Comparison, Intertwiner, SpectrumRow, WordRow};
pub use complex::{format_complex, parse_complex, ComplexValue};
pub use config::{Integrator, SuiteConfig, Tolerances};
pub use error::{HarnessError, Result};
pub use report::{digest, Format, Record, Report, Summary, VERSION};
pub use suite::{load_spec, resolve, run_suite, run_suite_with_jobs, Resolved};
pub use words::{alphabet, reduced_words};
