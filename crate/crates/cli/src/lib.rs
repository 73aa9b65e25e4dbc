//! Library side of the `jaco` command: argument definitions, file formats and
//! the subcommand implementations.

pub mod commands;
pub mod document;
pub mod error;
pub mod render;

pub use commands::{run, Cli};
pub use document::GraphDocument;
pub use error::CliError;
