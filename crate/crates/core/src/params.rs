//! Physical inputs, the effective commutative oscillator they map onto, and
//! the three-way regime split on the product `B*theta`.
//!
//! All arithmetic runs on reduced (dimensionless) quantities
//!
//! ```text
//!   b = B / (m w)         t = theta m w / hbar         b t = B theta / hbar
//! ```
//!
//! so that SI inputs, whose natural scales differ by fifty orders of
//! magnitude, never meet in a single float expression. Results are scaled
//! back to SI on exit.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::Rational;
use crate::scalar::Scalar;

/// Default relative tolerance for recognising `B*theta == hbar` in float mode.
pub const DEFAULT_CASE_TOLERANCE: f64 = 1e-12;

/// Reduced Planck constant, J s.
pub const HBAR_SI: f64 = 1.054571817e-34;

/// Elementary charge, C.
pub const ELECTRON_CHARGE_SI: f64 = 1.602176634e-19;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum UnitsMode {
    Si,
    /// `hbar = m = omega = 1`; `B` and `theta` are the reduced `b` and `t`.
    Dimensionless,
}

impl fmt::Display for UnitsMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            UnitsMode::Si => "si",
            UnitsMode::Dimensionless => "dimensionless",
        })
    }
}

/// Mass, trap frequency, field (already multiplied by a unit charge, so in
/// kg/s), noncommutativity and `hbar`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PhysicalParams<T> {
    units: UnitsMode,
    mass: T,
    omega: T,
    field: T,
    theta: T,
    hbar: T,
}

impl<T: Scalar> PhysicalParams<T> {
    /// Validated constructor.
    ///
    /// `B*theta` may exceed `hbar` by at most [`DEFAULT_CASE_TOLERANCE`]
    /// relative, so that deliberately saturated inputs survive rounding.
    pub fn new(units: UnitsMode, mass: T, omega: T, field: T, theta: T, hbar: T) -> Result<Self> {
        let p = Self { units, mass, omega, field, theta, hbar };
        p.validate(T::of(DEFAULT_CASE_TOLERANCE))?;
        Ok(p)
    }

    pub fn si(mass: T, omega: T, field: T, theta: T, hbar: T) -> Result<Self> {
        Self::new(UnitsMode::Si, mass, omega, field, theta, hbar)
    }

    pub fn dimensionless(field: T, theta: T) -> Result<Self> {
        Self::new(UnitsMode::Dimensionless, T::one(), T::one(), field, theta, T::one())
    }

    fn validate(&self, tol: T) -> Result<()> {
        let positive = |v: T, name: &str| {
            if v.is_finite() && v > T::zero() {
                Ok(())
            } else {
                Err(Error::Domain(format!("{name} must be positive and finite, got {v:e}")))
            }
        };
        positive(self.mass, "mass")?;
        positive(self.omega, "omega")?;
        positive(self.hbar, "hbar")?;
        positive(self.theta, "theta")?;
        if !(self.field.is_finite() && self.field >= T::zero()) {
            return Err(Error::Domain(format!(
                "magnetic field must be nonnegative and finite, got {:e}",
                self.field
            )));
        }
        if self.units == UnitsMode::Dimensionless
            && (self.mass != T::one() || self.omega != T::one() || self.hbar != T::one())
        {
            return Err(Error::Domain("dimensionless mode fixes hbar = m = omega = 1".into()));
        }
        if self.reduced_product() > T::one() + tol {
            return Err(self.constraint_violation());
        }
        Ok(())
    }

    fn constraint_violation(&self) -> Error {
        Error::ConstraintViolation {
            product: (self.field * self.theta).as_f64(),
            hbar: self.hbar.as_f64(),
        }
    }

    pub fn units(&self) -> UnitsMode {
        self.units
    }

    pub fn mass(&self) -> T {
        self.mass
    }

    pub fn omega(&self) -> T {
        self.omega
    }

    pub fn field(&self) -> T {
        self.field
    }

    pub fn theta(&self) -> T {
        self.theta
    }

    pub fn hbar(&self) -> T {
        self.hbar
    }

    /// Oscillator length `sqrt(hbar / (m w))`.
    pub fn natural_length(&self) -> T {
        (self.hbar / (self.mass * self.omega)).sqrt()
    }

    /// `b = B / (m w)`.
    pub fn reduced_field(&self) -> T {
        self.field / (self.mass * self.omega)
    }

    /// `t = theta m w / hbar`.
    pub fn reduced_theta(&self) -> T {
        self.theta * (self.mass * self.omega / self.hbar)
    }

    /// `B theta / hbar`, which equals `b t`.
    pub fn reduced_product(&self) -> T {
        self.field * (self.theta / self.hbar)
    }

    /// Same physics with `hbar = m = omega = 1`.
    pub fn to_dimensionless(&self) -> PhysicalParams<T> {
        PhysicalParams {
            units: UnitsMode::Dimensionless,
            mass: T::one(),
            omega: T::one(),
            field: self.reduced_field(),
            theta: self.reduced_theta(),
            hbar: T::one(),
        }
    }

    /// Energy scale `hbar w` that converts reduced energies back to SI.
    pub fn energy_scale(&self) -> T {
        self.hbar * self.omega
    }
}

/// The effective commutative oscillator `H = p^2/2M + M Omega^2 r^2/2 - gamma L_z`.
///
/// Besides the SI values the reduced forms (`M/m`, `Omega/w`, `gamma/w`,
/// `L/hbar^2`) are kept so that downstream code can stay dimensionless.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EffectiveParams<T> {
    mass_eff: T,
    omega_eff: T,
    gamma: T,
    l_factor: T,
    hbar: T,
    mass_scale: T,
    omega_scale: T,
    reduced_mass: T,
    reduced_omega: T,
    reduced_gamma: T,
    reduced_l: T,
}

impl<T: Scalar> EffectiveParams<T> {
    /// Effective mass `M`, kg.
    pub fn mass_eff(&self) -> T {
        self.mass_eff
    }

    /// Effective frequency `Omega`, 1/s.
    pub fn omega_eff(&self) -> T {
        self.omega_eff
    }

    /// Angular-momentum coupling `gamma`, 1/s.
    pub fn gamma(&self) -> T {
        self.gamma
    }

    /// `L = 2 hbar^2 + 2 hbar sqrt(hbar^2 - hbar B theta) - hbar B theta`, J^2 s^2.
    pub fn l_factor(&self) -> T {
        self.l_factor
    }

    pub fn hbar(&self) -> T {
        self.hbar
    }

    pub fn reduced_mass(&self) -> T {
        self.reduced_mass
    }

    pub fn reduced_omega(&self) -> T {
        self.reduced_omega
    }

    pub fn reduced_gamma(&self) -> T {
        self.reduced_gamma
    }

    pub fn reduced_l(&self) -> T {
        self.reduced_l
    }

    /// `gamma / Omega`: kappa in the field-free case, xi otherwise.
    pub fn ratio(&self) -> T {
        self.reduced_gamma / self.reduced_omega
    }

    /// Ground-state length `sqrt(hbar / (M Omega))`.
    pub fn length_scale(&self) -> T {
        let natural = (self.hbar / (self.mass_scale * self.omega_scale)).sqrt();
        natural / (self.reduced_mass * self.reduced_omega).sqrt()
    }

    /// `hbar Omega`, J.
    pub fn energy_unit(&self) -> T {
        self.hbar * self.omega_eff
    }

    /// Physical length scale of the bare oscillator, `sqrt(hbar/(m w))`.
    pub fn natural_length(&self) -> T {
        (self.hbar / (self.mass_scale * self.omega_scale)).sqrt()
    }
}

/// Maps the physical inputs onto `(M, Omega, gamma)`.
///
/// `M` and `gamma` follow the coefficients of the kinetic and `L_z` terms.
/// `Omega` comes from matching the `r^2` coefficient,
/// `M Omega^2 / 2 = (hbar^2 B^2 + m^2 w^2 L) / (2 m L)`, which in reduced form
/// reads `Omega^2 = (b^2 + L)(L + t^2) / (4 L)`.
pub fn effective_params<T: Scalar>(p: &PhysicalParams<T>) -> Result<EffectiveParams<T>> {
    let tol = T::of(DEFAULT_CASE_TOLERANCE);
    let bt = p.reduced_product();
    if bt > T::one() + tol {
        return Err(p.constraint_violation());
    }
    let b = p.reduced_field();
    let t = p.reduced_theta();
    let two = T::of(2.0);
    let four = T::of(4.0);
    let root = (T::one() - bt).max(T::zero()).sqrt();
    let l = two + two * root - bt;
    let reduced_mass = four / (l + t * t);
    let reduced_omega = ((b * b + l) * (l + t * t) / (four * l)).sqrt();
    let reduced_gamma = (b + t) / two;
    if !(reduced_mass.is_finite() && reduced_omega.is_finite() && reduced_mass > T::zero()) {
        return Err(Error::Domain(format!(
            "effective parameters are not finite for b = {b:e}, t = {t:e}"
        )));
    }
    Ok(EffectiveParams {
        mass_eff: reduced_mass * p.mass(),
        omega_eff: reduced_omega * p.omega(),
        gamma: reduced_gamma * p.omega(),
        l_factor: l * p.hbar() * p.hbar(),
        hbar: p.hbar(),
        mass_scale: p.mass(),
        omega_scale: p.omega(),
        reduced_mass,
        reduced_omega,
        reduced_gamma,
        reduced_l: l,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum CaseLabel {
    /// `B = 0`.
    #[serde(rename = "CaseI")]
    NoField,
    /// `B theta = hbar`: Landau-like, every level infinitely degenerate.
    #[serde(rename = "CaseII")]
    Saturated,
    /// `0 < B theta < hbar`.
    #[serde(rename = "CaseIII")]
    Intermediate,
}

impl fmt::Display for CaseLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CaseLabel::NoField => "CaseI",
            CaseLabel::Saturated => "CaseII",
            CaseLabel::Intermediate => "CaseIII",
        })
    }
}

/// Regime of `p` with a relative tolerance on `B theta = hbar`.
pub fn classify_case<T: Scalar>(p: &PhysicalParams<T>, tol: T) -> Result<CaseLabel> {
    let bt = p.reduced_product();
    if bt > T::one() + tol {
        return Err(p.constraint_violation());
    }
    if p.field() == T::zero() {
        Ok(CaseLabel::NoField)
    } else if (bt - T::one()).abs() <= tol {
        Ok(CaseLabel::Saturated)
    } else {
        Ok(CaseLabel::Intermediate)
    }
}

/// Regime of exact reduced inputs `b`, `t` (no tolerance).
pub fn classify_case_exact(b: &Rational, t: &Rational) -> Result<CaseLabel> {
    if b.is_negative() {
        return Err(Error::Domain("magnetic field must be nonnegative".into()));
    }
    if !t.is_positive() {
        return Err(Error::Domain("theta must be positive".into()));
    }
    let bt = b * t;
    if bt > 1 {
        return Err(Error::ConstraintViolation { product: bt.to_f64(), hbar: 1.0 });
    }
    Ok(if b.is_zero() {
        CaseLabel::NoField
    } else if bt == 1 {
        CaseLabel::Saturated
    } else {
        CaseLabel::Intermediate
    })
}

/// Radial and angular-momentum quantum numbers. Orders by `(n_r, m_l)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct QuantumNumbers {
    pub n_r: u64,
    pub m_l: i64,
}

impl QuantumNumbers {
    pub const fn new(n_r: u64, m_l: i64) -> Self {
        Self { n_r, m_l }
    }

    /// `2 n_r + |m_l|`, the oscillator shell index.
    pub fn shell(&self) -> u64 {
        2 * self.n_r + self.m_l.unsigned_abs()
    }
}

impl fmt::Display for QuantumNumbers {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.n_r, self.m_l)
    }
}
