use thiserror::Error;

/// Errors produced by the solver, the estimator, and the scenario layer.
#[derive(Debug, Error)]
pub enum Error {
    /// Pipe/fluid property combination for which no wave speed exists.
    #[error("invalid material: {0}")]
    InvalidMaterial(String),

    /// Scenario admits no steady-state solution.
    #[error("infeasible scenario: {0}")]
    InfeasibleScenario(String),

    /// A characteristic was requested on the wrong side of a boundary node.
    #[error("boundary misuse at node {node}: {reason}")]
    BoundaryMisuse { node: usize, reason: String },

    /// Boundary quadratic has no real root; flow reversal through a
    /// reservoir or valve boundary is not modeled.
    #[error("reverse flow through boundary node {node} is not supported")]
    ReverseFlow { node: usize },

    /// Argument outside the documented domain of an operation.
    #[error("domain error: {0}")]
    Domain(String),

    #[error("dimension mismatch: {0}")]
    Dimension(String),

    /// Finite-difference linearization produced non-finite entries.
    #[error("linearization failure: {0}")]
    Linearization(String),

    #[error("numerical failure: {0}")]
    Numerical(String),

    /// Scenario file syntax or semantic violation.
    #[error("scenario: {0}")]
    Scenario(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
