//! Energy spectra, exact degeneracy structure and rotationally symmetric
//! eigenfunctions of a charged isotropic harmonic oscillator on the
//! noncommutative plane in a homogeneous magnetic field.
//!
//! The numeric core is generic over [`Scalar`] (`f32` or `f64`); exact
//! level grouping runs on the arbitrary-precision [`Rational`]. The
//! [`oracle`] module holds independent solvers used to check the closed
//! forms: a finite-difference radial eigensolver, truncated ladder-operator
//! algebra, and a direct Hamiltonian residual.
//!
//! ```
//! use ncosc::{effective_params, energy, PhysicalParams64, QuantumNumbers};
//!
//! let p = PhysicalParams64::dimensionless(0.0, 0.5f64.sqrt()).unwrap();
//! let e = effective_params(&p).unwrap();
//! assert!((e.ratio() - 1.0 / 3.0).abs() < 1e-12);
//! assert!((energy(&e, QuantumNumbers::new(0, 0)) - e.omega_eff()).abs() < 1e-15);
//! ```

pub mod degeneracy;
pub mod error;
pub mod oracle;
pub mod params;
pub mod rational;
pub mod scalar;
pub mod spectrum;
pub mod wavefunctions;

pub use degeneracy::{
    degeneracy_count_profile, g_candidates, group_levels, kappa_from_params, kappa_from_spec, partners_case_negative,
    partners_case_positive, ratio_exact, theta_d_case1, xi_exact, xi_from_params, Branch, CaseIDegeneracySpec,
    CaseIIIDegeneracySpec, EnergyLevel, ExactRatio, GCandidate, MlDomain,
};
pub use error::{Error, Result};
pub use params::{
    classify_case, classify_case_exact, effective_params, CaseLabel, EffectiveParams, PhysicalParams, QuantumNumbers,
    UnitsMode,
};
pub use rational::Rational;
pub use scalar::Scalar;
pub use spectrum::{energy, energy_coefficient, energy_coefficient_exact, min_energy_steps};
pub use wavefunctions::{
    density_grid, density_spread_metric, laguerre, normalization_check, orthogonality_check, psi_squared, DensityGrid,
    Eigenstate,
};

pub type PhysicalParams64 = PhysicalParams<f64>;
pub type PhysicalParams32 = PhysicalParams<f32>;
pub type EffectiveParams64 = EffectiveParams<f64>;
pub type EffectiveParams32 = EffectiveParams<f32>;
pub type Eigenstate64 = Eigenstate<f64>;
pub type Eigenstate32 = Eigenstate<f32>;
pub type DensityGrid64 = DensityGrid<f64>;
pub type DensityGrid32 = DensityGrid<f32>;
