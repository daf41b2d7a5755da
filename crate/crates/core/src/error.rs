//! Crate-wide error type.

use thiserror::Error;

/// Errors surfaced by the library.
///
/// `Config` covers every precondition violation that can be determined
/// before any compute starts; `Numeric` covers failures detected mid-run
/// (non-finite losses, diverging optimizers). The CLI maps these onto its
/// exit codes (2 and 3 respectively).
#[derive(Debug, Error)]
pub enum Error {
    /// Invalid configuration, shape mismatch, or unsupported request.
    #[error("config error: {0}")]
    Config(String),

    /// Numeric failure during a run (non-finite values, divergence).
    #[error("numeric failure{}: {msg}", epoch.map(|e| format!(" at epoch {e}")).unwrap_or_default())]
    Numeric {
        /// Epoch at which the failure was detected, when applicable.
        epoch: Option<usize>,
        /// Description of the failure.
        msg: String,
    },

    /// Degenerate input to a metric (e.g. an all-zero spectrum slice).
    #[error("degenerate input: {0}")]
    Degenerate(String),

    /// I/O failure while reading or writing artifacts.
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),

    /// Malformed artifact file (checkpoint, config, ...).
    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    /// Shorthand for a configuration error.
    pub fn config(msg: impl Into<String>) -> Self {
        Error::Config(msg.into())
    }

    /// Shorthand for a numeric failure without epoch context.
    pub fn numeric(msg: impl Into<String>) -> Self {
        Error::Numeric { epoch: None, msg: msg.into() }
    }

    /// Attach epoch context to a numeric failure.
    pub fn at_epoch(self, epoch: usize) -> Self {
        match self {
            Error::Numeric { msg, .. } => Error::Numeric { epoch: Some(epoch), msg },
            other => other,
        }
    }
}
