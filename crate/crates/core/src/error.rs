use std::path::PathBuf;

use thiserror::Error;

/// Errors surfaced by the corpus toolkit.
#[derive(Error, Debug)]
pub enum Error {
    /// A manifest or config document does not match its schema.
    #[error("schema error: {0}")]
    Schema(String),

    /// Two sources in a manifest share the same name.
    #[error("duplicate source name: {0}")]
    DuplicateSource(String),

    /// A source declares a format outside {{plain, doc-per-block, jsonl}}.
    #[error("unknown source format: {0}")]
    UnknownFormat(String),

    /// Input bytes are not valid UTF-8.
    #[error("invalid UTF-8 in {path}: {detail}")]
    InvalidUtf8 { path: PathBuf, detail: String },

    /// A configuration value violates its invariants.
    #[error("config error: {0}")]
    Config(String),

    /// BPE training was given an empty corpus.
    #[error("cannot train BPE on an empty corpus")]
    EmptyCorpus,

    /// A token id is outside the vocabulary.
    #[error("unknown token id {0} (vocab size {1})")]
    UnknownId(u32, u32),

    /// A scalar-unit vocabulary met a scalar outside its base alphabet.
    #[error("scalar {0:?} is not in the vocabulary's base alphabet")]
    UnknownUnit(char),

    /// A vocabulary file is malformed.
    #[error("bad vocab file: {0}")]
    BadVocab(String),

    /// A charset override or patterns file is malformed.
    #[error("bad override file: {0}")]
    BadOverride(String),

    #[error("I/O error on {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
}

impl Error {
    pub(crate) fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
