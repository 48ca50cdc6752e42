//! Crate-wide error type and result alias.

use std::fmt;

/// Result alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;

/// Pipeline stage tag attached to harness errors so the CLI can map a
/// failure to a distinct exit code.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Stage {
    Config,
    Manifest,
    Model,
    Evaluate,
    Paired,
    Wcam,
    Augment,
    Report,
}

impl Stage {
    /// Nonzero process exit code for a failure in this stage.
    pub fn exit_code(self) -> i32 {
        match self {
            Stage::Config => 2,
            Stage::Manifest => 3,
            Stage::Model => 4,
            Stage::Evaluate => 5,
            Stage::Paired => 6,
            Stage::Wcam => 7,
            Stage::Augment => 8,
            Stage::Report => 9,
        }
    }
}

impl fmt::Display for Stage {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            Stage::Config => "config",
            Stage::Manifest => "manifest",
            Stage::Model => "model",
            Stage::Evaluate => "evaluate",
            Stage::Paired => "paired",
            Stage::Wcam => "wcam",
            Stage::Augment => "augment",
            Stage::Report => "report",
        };
        f.write_str(name)
    }
}

#[derive(Debug, thiserror::Error)]
pub enum Error {
    /// A caller-supplied value violates an operation's preconditions.
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// An array shape is incompatible with the requested transform.
    #[error("dimension error: {0}")]
    Dimension(String),

    /// A model adapter failed to evaluate an image.
    #[error("model '{name}' failed: {message}")]
    Model { name: String, message: String },

    /// Classifier head training could not proceed.
    #[error("training error: {0}")]
    Training(String),

    /// Prediction requested from a head that was never fitted.
    #[error("state error: linear head is untrained")]
    UntrainedHead,

    /// Operation is valid but deliberately unimplemented in this version.
    #[error("unsupported operation: {0}")]
    Unsupported(String),

    /// A manifest row failed validation.
    #[error("manifest row {row}, field '{field}': {message}")]
    Manifest {
        row: usize,
        field: String,
        message: String,
    },

    /// Harness failure tagged with the pipeline stage that produced it.
    #[error("stage '{stage}' failed: {source}")]
    Stage {
        stage: Stage,
        #[source]
        source: Box<Error>,
    },

    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),

    #[error("image codec error: {0}")]
    Image(#[from] image::ImageError),

    #[error("csv error: {0}")]
    Csv(#[from] csv::Error),

    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

impl Error {
    /// Wrap any error with a harness stage tag. Already-tagged errors keep
    /// their original (innermost) stage.
    pub fn at_stage(self, stage: Stage) -> Error {
        match self {
            Error::Stage { .. } => self,
            other => Error::Stage {
                stage,
                source: Box::new(other),
            },
        }
    }

    /// The stage tag, if this error carries one.
    pub fn stage(&self) -> Option<Stage> {
        match self {
            Error::Stage { stage, .. } => Some(*stage),
            _ => None,
        }
    }

    /// Exit code for the CLI: stage-specific when tagged, 1 otherwise.
    pub fn exit_code(&self) -> i32 {
        self.stage().map_or(1, Stage::exit_code)
    }
}

/// Extension for tagging harness results with their pipeline stage.
pub trait StageExt<T> {
    fn at_stage(self, stage: Stage) -> Result<T>;
}

impl<T> StageExt<T> for Result<T> {
    fn at_stage(self, stage: Stage) -> Result<T> {
        self.map_err(|e| e.at_stage(stage))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn stage_tag_is_not_overwritten() {
        let inner = Error::InvalidArgument("x".into()).at_stage(Stage::Manifest);
        let outer = inner.at_stage(Stage::Report);
        assert_eq!(outer.stage(), Some(Stage::Manifest));
        assert_eq!(outer.exit_code(), 3);
    }

    #[test]
    fn untagged_errors_exit_one() {
        assert_eq!(Error::UntrainedHead.exit_code(), 1);
    }
}
