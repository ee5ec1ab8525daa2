use thiserror::Error;

use crate::graph::ArrangementReport;

#[derive(Debug, Error)]
pub enum Error {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("instance has no vertices")]
    EmptyInstance,

    #[error("invalid clique arrangement: {0}")]
    InvalidArrangement(ArrangementReport),

    #[error("boundary state {0} is infeasible in the final table")]
    InfeasibleState(String),

    #[error("oracle guard exceeded: graph has {n} vertices, guard is {guard}")]
    OracleGuard { n: usize, guard: usize },

    #[error("invalid generator spec: {0}")]
    InvalidSpec(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
