//! File formats, validation, rendering and benchmarking around
//! [`quadsteer_core`].

pub mod bench;
pub mod error;
pub mod format;
pub mod render;
pub mod runner;
pub mod validate;

pub use error::CliError;
