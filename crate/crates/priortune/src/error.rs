//! Crate-wide error type.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    /// A distribution or mixture specification violates a family constraint.
    #[error("invalid distribution spec: {0}")]
    InvalidSpec(String),

    /// An argument lies outside an operation's domain.
    #[error("domain error: {0}")]
    Domain(String),

    /// A predictive sampler produced a non-finite draw or failed outright.
    #[error("predictive sampler failed at covariate row {row} ({label}): {message}")]
    Sampler {
        row: usize,
        label: String,
        message: String,
    },

    /// A marginal standard deviation was unusable for the secondary objective.
    #[error("secondary objective component '{component}': {message}")]
    Secondary { component: String, message: String },

    #[error("optimizer: {0}")]
    Optimizer(String),

    #[error("Gaussian process fit failed: {0}")]
    GpFit(String),

    /// Collected configuration schema violations (reported exhaustively).
    #[error("configuration invalid:\n{}", .0.join("\n"))]
    Config(Vec<String>),

    #[error("{stage}: {source}")]
    Stage {
        stage: String,
        #[source]
        source: Box<Error>,
    },

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error("CSV: {0}")]
    Csv(#[from] csv::Error),

    #[error("JSON: {0}")]
    Json(#[from] serde_json::Error),
}

impl Error {
    /// Attach pipeline stage/batch context to an error bubbling up from a component.
    pub fn in_stage(self, stage: impl Into<String>) -> Self {
        Error::Stage {
            stage: stage.into(),
            source: Box::new(self),
        }
    }
}
