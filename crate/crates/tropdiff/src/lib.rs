//! File formats and command implementations for the `tropdiff` binary.

pub mod commands;
pub mod error;
pub mod json;
pub mod problem;

pub use commands::{Output, Selection};
pub use error::CliError;
pub use problem::{Problem, ProblemFile};
