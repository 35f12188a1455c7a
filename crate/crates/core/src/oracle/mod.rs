//! Independent numerical checks of the closed-form results: a radial
//! finite-difference eigensolver, truncated operator algebra, and a pointwise
//! Hamiltonian residual.

pub mod operators;
pub mod radial_fd;
pub mod residual;
pub mod tridiagonal;

pub use operators::{
    build_nc_operators, commutator_residuals, hermiticity_residual, truncated_ground_energy, NcOperators,
    OperatorMatrix,
};
pub use radial_fd::{fd_radial_eigenvalues, fd_radial_matrix, fd_radial_richardson, RadialGrid};
pub use residual::{hamiltonian_residual, DEFAULT_RESIDUAL_STEP};
pub use tridiagonal::lowest_eigenvalues;
