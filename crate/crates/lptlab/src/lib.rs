//! Catalog sweeps over small graphs, with fixtures, reports and a resumable
//! counterexample search built on `lptlab_core`.

mod error;
pub mod fixtures;
pub mod hunt;
pub mod input;
pub mod report;
pub mod suite;

pub use error::{HarnessError, Result};
pub use report::{Record, Section, SuiteReport, Violation, ViolationKind};
pub use suite::{run_suite, SuiteConfig, SuiteName};
