use thiserror::Error;

use crate::params::CaseLabel;

/// Errors raised by the library.
///
/// The variants map one-to-one onto the failure classes the command line
/// front end turns into exit codes.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("constraint violation: B*theta = {product:e} exceeds hbar = {hbar:e}")]
    ConstraintViolation { product: f64, hbar: f64 },

    #[error("domain error: {0}")]
    Domain(String),

    #[error("case mismatch: operation requires {expected}, parameters are {found}")]
    CaseMismatch { expected: &'static str, found: CaseLabel },

    #[error("empty result: {0}")]
    EmptyResult(String),

    #[error("budget exceeded: {what} needs {requested}, cap is {cap}")]
    BudgetExceeded {
        what: &'static str,
        requested: u128,
        cap: u128,
    },

    #[error("unbounded degeneracy: {0}")]
    UnboundedDegeneracy(String),

    #[error("quadrature did not reach {tolerance:e} after {panels} panels (last change {change:e})")]
    QuadratureFailure {
        tolerance: f64,
        panels: usize,
        change: f64,
    },

    #[error("eigenvalue extraction failed: {0}")]
    ConvergenceFailure(String),

    #[error("grid too coarse: {0}")]
    GridTooCoarse(String),

    #[error("sample at r = {r:e} lies inside the guard band of a radial node")]
    SingularSample { r: f64 },

    #[error("invalid degeneracy spec: {0}")]
    InvalidSpec(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
