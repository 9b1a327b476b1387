use thiserror::Error;

use uptail::{GraphError, ParseError, SimError, SolveError};

/// Process exit codes.
pub mod exit {
    pub const OK: i32 = 0;
    /// Bad flag values, failing example rows and other plain errors.
    pub const INVALID: i32 = 1;
    pub const PARSE: i32 = 2;
    pub const CAP: i32 = 3;
    pub const INFEASIBLE: i32 = 4;
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("cannot read {path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("{0:?} is neither a readable file nor a built-in graph name")]
    UnknownGraph(String),
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Solve(#[from] SolveError),
    #[error(transparent)]
    Sim(#[from] SimError),
    #[error("{0}")]
    Invalid(String),
    #[error("{0} example rows failed")]
    ExamplesFailed(usize),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Io { .. } | CliError::UnknownGraph(_) | CliError::Parse(_) => exit::PARSE,
            CliError::Graph(GraphError::CoreTooLarge { .. } | GraphError::TooManyArcs { .. }) => exit::CAP,
            CliError::Sim(SimError::CapExceeded { .. } | SimError::CliqueTooLarge(_)) => exit::CAP,
            CliError::Solve(SolveError::Infeasible | SolveError::InfeasibleSlice) => exit::INFEASIBLE,
            CliError::Sim(SimError::InfeasibleMeasures { .. } | SimError::NoFeasiblePoint) => exit::INFEASIBLE,
            _ => exit::INVALID,
        }
    }
}
