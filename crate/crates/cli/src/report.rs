//! Report envelope shared by every command.

use serde::Serialize;
use serde_json::Value;

use fermigauss::Error;

#[derive(Debug, Serialize)]
pub struct Check {
    pub name: String,
    pub residual: f64,
    pub tolerance: f64,
    pub pass: bool,
}

impl Check {
    pub fn new(name: impl Into<String>, residual: f64, tolerance: f64) -> Self {
        Check { name: name.into(), residual, tolerance, pass: residual.is_finite() && residual <= tolerance }
    }
}

#[derive(Debug, Serialize)]
pub struct Report {
    pub command: &'static str,
    pub config: Value,
    pub result: Value,
    pub checks: Vec<Check>,
    pub pass: bool,
}

impl Report {
    pub fn new(command: &'static str, config: Value, result: Value, checks: Vec<Check>) -> Self {
        let pass = checks.iter().all(|c| c.pass);
        Report { command, config, result, checks, pass }
    }
}

/// Failure classes, mapped to exit codes.
#[derive(Debug)]
pub enum CliError {
    /// Unreadable or malformed input: exit 2.
    Parse(String),
    /// Input that parses but breaks an invariant: exit 2.
    Validation { invariant: &'static str, message: String },
    /// Numerical breakdown inside a computation: exit 1.
    Numeric(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Numeric(_) => 1,
            _ => 2,
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            CliError::Parse(_) => "ParseError",
            CliError::Validation { .. } => "ValidationError",
            CliError::Numeric(_) => "NumericError",
        }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Parse(m) | CliError::Numeric(m) => f.write_str(m),
            CliError::Validation { invariant, message } => write!(f, "{invariant}: {message}"),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        let invariant = match &e {
            Error::Singular { .. }
            | Error::SingularCovariance
            | Error::BranchAmbiguity { .. }
            | Error::StepTooLarge { .. }
            | Error::NonFinite(_) => return CliError::Numeric(e.to_string()),
            Error::NotAntisymmetric { .. } => "antisymmetry",
            Error::NotGeneralizedAntisymmetric { .. } => "generalized-antisymmetry",
            Error::OddDimension(_) => "even-dimension",
            Error::NotSquare { .. } => "square",
            Error::DimensionMismatch { .. } | Error::ModeMismatch { .. } => "dimension",
            Error::ModeCountOutOfRange(_) => "mode-range",
            Error::IndexOutOfRange { .. } => "index-range",
            Error::NotPhysical(_) => "physical",
            Error::NotThermal => "number-conserving",
            Error::NotDiagonal { .. } => "diagonal",
            Error::SuperselectionViolated { .. } => "superselection",
            Error::NotPositive => "positive-semidefinite",
            Error::NotNormalized(_) => "unit-trace",
            Error::NotHermitian(_) => "hermitian",
            Error::TotalNumberMismatch { .. } => "equal-totals",
            Error::OddNumberDifference { .. } => "even-difference",
            Error::InvalidOccupation => "occupation",
            Error::InvalidSchedule => "epsilon-schedule",
        };
        CliError::Validation { invariant, message: e.to_string() }
    }
}
