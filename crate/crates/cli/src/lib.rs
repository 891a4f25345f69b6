//! Command-line front-end for `affine_frames`: JSON curve documents in,
//! exact JSON results or SVG figures out.

pub mod commands;
pub mod document;
pub mod svg;

pub use commands::{run_command, verify, Command, Options};
pub use document::{parse_curve, parse_result, CurveDocument, Payload, ResultDocument};
pub use svg::plot_svg;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("invalid input: {0}")]
    Input(String),

    #[error("rejected: {0}")]
    Rejected(String),

    #[error("verification failed: {0}")]
    VerifyFailed(String),

    #[error("{0}")]
    Io(#[from] std::io::Error),

    #[error("internal error: {0}")]
    Internal(String),
}

impl CliError {
    /// 2 for anything the caller can fix by changing the input, 1 otherwise.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Input(_) | CliError::Rejected(_) | CliError::VerifyFailed(_) => 2,
            CliError::Io(_) | CliError::Internal(_) => 1,
        }
    }
}
