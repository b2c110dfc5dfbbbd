//! Loading documents and running verification suites for the `fatcat` binary.

pub mod builtins;
pub mod document;
pub mod error;
pub mod suites;

use fatcat_core::instances::Limits;

pub use document::{Resolved, SpecDocument};
pub use error::LoadError;
pub use suites::{run_suite, Report, SuiteOptions, SUITES};

/// Loads `builtin:NAME` or a JSON document from a file path.
pub fn load_spec(input: &str, limits: &Limits) -> Result<SpecDocument, LoadError> {
    if let Some(name) = input.strip_prefix("builtin:") {
        return builtins::builtin(name, limits);
    }
    let text = std::fs::read_to_string(input).map_err(|e| LoadError::Io {
        path: input.to_string(),
        message: e.to_string(),
    })?;
    let doc = SpecDocument::parse(&text)?;
    doc.resolve(limits)?;
    Ok(doc)
}
