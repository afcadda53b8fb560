//! Group specifications, cycle notation, generator files, DOT and JSON output.

mod cycles;
mod dot;
mod report;
mod spec;

use std::path::PathBuf;

use thiserror::Error;

use crate::group::GroupError;

pub(crate) use cycles::group_from_text;
pub use cycles::{parse_cycles, parse_generator_text, read_generator_file, GeneratorFile};
pub use dot::{write_dot, LabelMismatch};
pub use report::{write_report, write_survey};
pub use spec::{parse_group_spec, GroupSpec};

/// A syntax error at a byte offset of the input.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("at position {position}: {message}")]
pub struct ParseError {
    pub position: usize,
    pub message: String,
}

impl ParseError {
    pub(crate) fn new(position: usize, message: impl Into<String>) -> Self {
        ParseError {
            position,
            message: message.into(),
        }
    }
}

#[derive(Debug, Error)]
pub enum LoadError {
    #[error("invalid group spec: {0}")]
    Spec(#[from] ParseError),
    #[error("cannot read {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("{path}, line {line}: {error}")]
    GeneratorLine {
        path: PathBuf,
        line: usize,
        error: ParseError,
    },
    #[error(transparent)]
    Group(#[from] GroupError),
}
