use thiserror::Error;

use fatcat_core::instances::InstanceError;
use fatcat_core::{CategoryError, MonoidalError};

/// Anything that stops a suite from running: exit code 2.
#[derive(Debug, Error)]
pub enum LoadError {
    #[error("cannot read {path}: {message}")]
    Io { path: String, message: String },
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("dangling reference: no {what} named {name:?}")]
    Dangling { what: &'static str, name: String },
    #[error("unknown builtin {0:?}")]
    UnknownBuiltin(String),
    #[error("unknown suite {0:?}")]
    UnknownSuite(String),
    #[error("unknown predicate {0:?}")]
    UnknownPredicate(String),
    #[error("suite {suite} does not apply to a {kind} document")]
    Inapplicable { suite: String, kind: String },
    #[error("size guard: {0}")]
    SizeGuard(String),
    #[error("invalid document: {0}")]
    Invalid(String),
    #[error(transparent)]
    Instance(#[from] InstanceError),
    #[error(transparent)]
    Category(#[from] CategoryError),
    #[error(transparent)]
    Monoidal(#[from] MonoidalError),
}
