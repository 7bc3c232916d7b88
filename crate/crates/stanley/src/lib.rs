//! Command-line harness around `stanley-core`: the ideal text format,
//! JSON reports, seeded corpora and batch checks.

pub mod budget;
pub mod cli;
pub mod corpus;
pub mod mixed;
pub mod parse;
pub mod report;

pub use budget::Deadline;
pub use corpus::{generate_corpus, CorpusSpec, Family};
pub use parse::{parse_ideal, ParseError};

use stanley_core::Error as CoreError;

/// Errors surfaced by the CLI, each with a fixed process exit code.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("usage: {0}")]
    Usage(String),
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("{0}")]
    Core(#[from] CoreError),
    #[error("io error on {path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("corpus generation gave up after {attempts} attempts for ideal #{index}")]
    RejectionExhausted { index: usize, attempts: usize },
}

impl Error {
    /// 1 usage, 2 parse, 3 resource/timeout. Invariant violations (4) are
    /// not errors; commands report them through their outcome.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Usage(_) | Error::Io { .. } => 1,
            Error::Parse(_) => 2,
            Error::Core(e) if e.is_resource() => 3,
            Error::Core(CoreError::ExponentCap { .. }) => 2,
            Error::Core(_) => 1,
            Error::RejectionExhausted { .. } => 3,
        }
    }
}

pub const EXIT_VIOLATION: i32 = 4;
