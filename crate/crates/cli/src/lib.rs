//! Command implementations behind the `braidforge` binary.

pub mod config;
pub mod enumerate;
pub mod error;
pub mod render;
pub mod report;

pub use config::{BoundsArg, RunConfig};
pub use error::{CliError, CliResult};
