//! Verification suites and computations behind the `capelli` command.

pub mod compute;
pub mod harness;
pub mod suites;

pub use harness::{run_verify, ParamError, RunReport, Suite, SuiteConfig};
