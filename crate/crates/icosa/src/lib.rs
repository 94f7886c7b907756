//! File formats, numeric cross-checks, verification campaigns and the
//! command-line driver for `icosa-core`.

pub mod commands;
pub mod json;
pub mod numeric;
pub mod random;
pub mod render;
pub mod verify;

use icosa_core::classify::ClassifyError;
use icosa_core::exactnum::ExactError;
use icosa_core::lfactors::LFactorError;
use icosa_core::params::ParamError;

/// Anything wrong with user-supplied input. Maps to exit status 2.
#[derive(Debug, thiserror::Error)]
pub enum InputError {
    #[error("cannot read input: {0}")]
    Io(#[from] std::io::Error),
    #[error("malformed JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Exact(#[from] ExactError),
    #[error(transparent)]
    Param(#[from] ParamError),
    #[error(transparent)]
    Classify(#[from] ClassifyError),
    #[error(transparent)]
    LFactor(#[from] LFactorError),
    #[error("{0}")]
    Shape(String),
}
