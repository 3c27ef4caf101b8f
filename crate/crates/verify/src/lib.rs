//! Runs the verification suite over a data directory and renders the
//! resulting report.

pub mod data;
pub mod error;
pub mod report;
pub mod suite;

pub use data::DataSet;
pub use error::VerifyError;
pub use report::{render, CheckResult, Format, Source, Status, Summary, VerificationReport};
pub use suite::{run_on, run_suite, Config, Selector};
