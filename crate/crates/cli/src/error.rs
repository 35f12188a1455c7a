use thiserror::Error;

/// Process exit codes.
pub mod exit {
    pub const OK: i32 = 0;
    /// A verification suite or an internal numerical step failed.
    pub const FAILURE: i32 = 1;
    /// Bad configuration, domain error, or `B theta > hbar`.
    pub const DOMAIN: i32 = 2;
    pub const BUDGET: i32 = 3;
    pub const EMPTY: i32 = 4;
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] ncosc::Error),
    #[error("configuration: {0}")]
    Config(String),
    #[error("i/o: {0}")]
    Io(#[from] std::io::Error),
    #[error("verification failed: {0}")]
    VerificationFailed(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        use ncosc::Error as E;
        match self {
            CliError::Config(_) => exit::DOMAIN,
            CliError::Io(_) | CliError::VerificationFailed(_) => exit::FAILURE,
            CliError::Core(e) => match e {
                E::ConstraintViolation { .. }
                | E::Domain(_)
                | E::CaseMismatch { .. }
                | E::InvalidSpec(_)
                | E::Parse(_) => exit::DOMAIN,
                E::BudgetExceeded { .. } | E::UnboundedDegeneracy(_) => exit::BUDGET,
                E::EmptyResult(_) => exit::EMPTY,
                E::QuadratureFailure { .. }
                | E::ConvergenceFailure(_)
                | E::GridTooCoarse(_)
                | E::SingularSample { .. } => exit::FAILURE,
            },
        }
    }
}
