//! Application errors with stable exit-code categories.

use thiserror::Error;

/// Exit-code category, stable for scripting.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorCategory {
    /// Malformed input file: bad syntax, unknown columns, bad cells.
    Parse,
    /// Semantically invalid values or unresolved references.
    Validation,
    /// Scheme or anchor configuration the engine cannot satisfy.
    Config,
}

impl ErrorCategory {
    pub fn exit_code(self) -> i32 {
        match self {
            ErrorCategory::Parse => 2,
            ErrorCategory::Validation => 3,
            ErrorCategory::Config => 4,
        }
    }
}

#[derive(Debug, Error)]
pub enum AppError {
    #[error("{path}: {message}")]
    Parse { path: String, message: String },
    #[error("{message}")]
    Validation { message: String },
    #[error("{message}")]
    Config { message: String },
    #[error("{path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
}

impl AppError {
    pub fn parse(path: &str, message: impl Into<String>) -> AppError {
        AppError::Parse { path: path.into(), message: message.into() }
    }

    pub fn validation(message: impl Into<String>) -> AppError {
        AppError::Validation { message: message.into() }
    }

    pub fn config(message: impl Into<String>) -> AppError {
        AppError::Config { message: message.into() }
    }

    pub fn io(path: &str, source: std::io::Error) -> AppError {
        AppError::Io { path: path.into(), source }
    }

    pub fn category(&self) -> ErrorCategory {
        match self {
            AppError::Parse { .. } | AppError::Io { .. } => ErrorCategory::Parse,
            AppError::Validation { .. } => ErrorCategory::Validation,
            AppError::Config { .. } => ErrorCategory::Config,
        }
    }
}

pub type AppResult<T> = Result<T, AppError>;
