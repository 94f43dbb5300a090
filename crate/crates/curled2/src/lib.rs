//! Command-line front end for `curled2-core`: argument parsing, JSON and
//! table rendering, and timed verification reports.

pub mod cli;
pub mod report;

pub use cli::{run, Output};
pub use report::{CheckEntry, VerificationReport};
