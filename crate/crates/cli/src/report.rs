use std::fmt;

use gw3ca_core::conformal::ConformalError;
use gw3ca_core::freefield::FreeFieldError;
use gw3ca_core::scalars::ScalarError;
use gw3ca_core::verma::VermaError;
use serde_json::Value;

/// Output of a subcommand; `ok` is false when a checked identity failed.
pub struct Report {
    pub text: String,
    pub json: Value,
    pub ok: bool,
}

impl Report {
    pub fn new(text: String, json: Value, ok: bool) -> Report {
        Report { text, json, ok }
    }
}

#[derive(Debug)]
pub enum CliError {
    Parse(String),
    Pole(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Parse(_) => 1,
            CliError::Pole(_) => 3,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Parse(m) => write!(f, "parse error: {}", m),
            CliError::Pole(m) => write!(f, "parameter pole: {}", m),
        }
    }
}

impl From<ConformalError> for CliError {
    fn from(e: ConformalError) -> Self {
        match e {
            ConformalError::Parse(m) => CliError::Parse(m),
            _ => CliError::Parse(e.to_string()),
        }
    }
}

impl From<ScalarError> for CliError {
    fn from(e: ScalarError) -> Self {
        match e {
            ScalarError::Parse(m) => CliError::Parse(m),
            _ => CliError::Pole(e.to_string()),
        }
    }
}

impl From<FreeFieldError> for CliError {
    fn from(e: FreeFieldError) -> Self {
        match e {
            FreeFieldError::ParameterPole(m) => CliError::Pole(m),
            _ => CliError::Pole(e.to_string()),
        }
    }
}

impl From<VermaError> for CliError {
    fn from(e: VermaError) -> Self {
        match e {
            VermaError::CMZero => CliError::Pole(e.to_string()),
            _ => CliError::Parse(e.to_string()),
        }
    }
}
