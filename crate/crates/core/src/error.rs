use thiserror::Error;

use crate::logic::ParseError;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("duplicate location id '{0}'")]
    DuplicateLocationId(String),
    #[error("duplicate edge between '{a}' and '{b}'")]
    DuplicateEdge { a: String, b: String },
    #[error("self-loop at location '{0}'")]
    SelfLoop(String),
    #[error("edge endpoint '{0}' is not a declared location")]
    UnknownEndpoint(String),
    #[error("edge '{a}'-'{b}' has weight {weight}; weights must be positive and finite")]
    NonPositiveWeight { a: String, b: String, weight: f64 },
    #[error("unknown location '{0}'")]
    UnknownLocation(String),
    #[error("invalid route: {0}")]
    InvalidRoute(String),
    #[error("location '{location}' has no signal field '{field}'")]
    MissingField { field: String, location: String },
    #[error("operator `{0}` needs a finite upper distance bound")]
    UnboundedInterval(String),
    #[error("invalid interval: {0}")]
    InvalidInterval(String),
    #[error("{what} exceeded its budget of {limit}")]
    BudgetExceeded { what: &'static str, limit: usize },
    #[error("cannot reduce an empty set of resilience pairs")]
    EmptyInput,
    #[error("fixpoint iteration did not converge within {0} rounds")]
    IterationCap(usize),
    #[error("invalid budget: {0}")]
    InvalidBudget(String),
    #[error("{path}: {message}")]
    Io { path: String, message: String },
    #[error("malformed JSON: {0}")]
    Json(String),
    #[error("schema violation at '{pointer}': {message}")]
    Schema { pointer: String, message: String },
    #[error(transparent)]
    Parse(#[from] ParseError),
}

impl Error {
    /// Stable identifier used in machine-readable diagnostics.
    pub fn code(&self) -> &'static str {
        match self {
            Error::DuplicateLocationId(_) => "DuplicateLocationId",
            Error::DuplicateEdge { .. } => "DuplicateEdge",
            Error::SelfLoop(_) => "SelfLoop",
            Error::UnknownEndpoint(_) => "UnknownEndpoint",
            Error::NonPositiveWeight { .. } => "NonPositiveWeight",
            Error::UnknownLocation(_) => "UnknownLocation",
            Error::InvalidRoute(_) => "InvalidRoute",
            Error::MissingField { .. } => "MissingField",
            Error::UnboundedInterval(_) => "UnboundedInterval",
            Error::InvalidInterval(_) => "InvalidInterval",
            Error::BudgetExceeded { .. } => "BudgetExceeded",
            Error::EmptyInput => "EmptyInput",
            Error::IterationCap(_) => "IterationCap",
            Error::InvalidBudget(_) => "InvalidBudget",
            Error::Io { .. } => "Io",
            Error::Json(_) => "Json",
            Error::Schema { .. } => "Schema",
            Error::Parse(_) => "ParseError",
        }
    }

    /// True for errors caused by malformed input (models, formulas, ids) rather
    /// than by an evaluation that could not complete.
    pub fn is_input_error(&self) -> bool {
        !matches!(
            self,
            Error::BudgetExceeded { .. } | Error::IterationCap(_) | Error::EmptyInput
        )
    }
}
