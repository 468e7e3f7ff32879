//! Report assembly and the error-to-exit-code mapping.

use homcss::arith::ArithError;
use homcss::bounds::BoundsError;
use homcss::builders::BuilderError;
use homcss::complex::ComplexError;
use homcss::css::CodeError;
use serde_json::{json, Value};

/// A finished command: the JSON value (with embedded config), a one-line
/// summary for `--quiet`, and the exit code (validation commands report
/// failures in JSON and exit 2).
pub struct Report {
    pub value: Value,
    pub summary: String,
    pub exit: i32,
}

impl Report {
    pub fn new(config: Value, result: Value, summary: impl Into<String>) -> Self {
        Report {
            value: json!({ "config": config, "result": result }),
            summary: summary.into(),
            exit: 0,
        }
    }

    pub fn with_exit(mut self, exit: i32) -> Self {
        self.exit = exit;
        self
    }

    pub fn render(&self) -> String {
        let mut text =
            serde_json::to_string_pretty(&self.value).expect("report serialization cannot fail");
        text.push('\n');
        text
    }
}

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Validation(String),
    Budget(String),
    Other(String),
}

impl CliError {
    pub fn message(&self) -> &str {
        match self {
            CliError::Usage(m) | CliError::Validation(m) | CliError::Budget(m)
            | CliError::Other(m) => m,
        }
    }

    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 64,
            CliError::Validation(_) => 2,
            CliError::Budget(_) => 3,
            CliError::Other(_) => 1,
        }
    }
}

impl From<ComplexError> for CliError {
    fn from(e: ComplexError) -> Self {
        match e {
            ComplexError::NotAComplex { .. } => CliError::Validation(e.to_string()),
            ComplexError::Json(_) => CliError::Other(e.to_string()),
            _ => CliError::Validation(e.to_string()),
        }
    }
}

impl From<BuilderError> for CliError {
    fn from(e: BuilderError) -> Self {
        CliError::Validation(e.to_string())
    }
}

impl From<CodeError> for CliError {
    fn from(e: CodeError) -> Self {
        match e {
            CodeError::BudgetExceeded { .. } => CliError::Budget(e.to_string()),
            _ => CliError::Validation(e.to_string()),
        }
    }
}

impl From<ArithError> for CliError {
    fn from(e: ArithError) -> Self {
        match e {
            ArithError::SearchTooLarge(_) => CliError::Budget(e.to_string()),
            ArithError::ModulusTooSmall(_)
            | ArithError::ModulusTooLarge(_)
            | ArithError::NonpositiveConstant(_)
            | ArithError::NoGenerators => CliError::Usage(e.to_string()),
            _ => CliError::Validation(e.to_string()),
        }
    }
}

impl From<BoundsError> for CliError {
    fn from(e: BoundsError) -> Self {
        match e {
            BoundsError::OddDimension(_) | BoundsError::OutOfRange(_) | BoundsError::BadGrid => {
                CliError::Usage(e.to_string())
            }
        }
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Other(e.to_string())
    }
}

impl From<serde_json::Error> for CliError {
    fn from(e: serde_json::Error) -> Self {
        CliError::Other(e.to_string())
    }
}
