//! Report assembly behind the `uptail` binary.
//!
//! Each command is a plain function returning serializable data. The binary
//! only parses flags, prints, and maps [`CliError`] to an exit code.

// `!(x > 0.0)` is used on purpose: it also rejects NaN.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

mod error;
pub mod examples;
pub mod plant;
pub mod report;
pub mod simulate;

use std::path::Path;

use uptail::{families, Digraph};

pub use error::{exit, CliError};

pub const TOOL_NAME: &str = "uptail";
pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

/// Reads `arg` as an edge-list file, or failing that as a built-in name such
/// as `cycle:4` or `gap:5`.
pub fn load_graph(arg: &str) -> Result<Digraph, CliError> {
    let path = Path::new(arg);
    if path.is_file() {
        let text = std::fs::read_to_string(path).map_err(|source| CliError::Io { path: arg.to_string(), source })?;
        return Ok(Digraph::parse(&text)?);
    }
    families::builtin(arg).ok_or_else(|| CliError::UnknownGraph(arg.to_string()))
}
