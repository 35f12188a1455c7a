//! Symmetric-gauge eigenfunctions of the effective oscillator.
//!
//! With `l = sqrt(hbar / (M Omega))` and `u = (r / l)^2`,
//!
//! ```text
//! |Psi|^2 = 1/(pi l^2) * n_r!/(n_r + |m_l|)! * u^|m_l| e^{-u} [L_{n_r}^{|m_l|}(u)]^2
//! ```
//!
//! which folds the `1/sqrt(2 pi r)` prefactor and the `sqrt(r)` inside the
//! radial function together, so `r = 0` needs no special casing.

mod density;
mod laguerre;
pub mod quadrature;

pub use density::{
    density_grid, density_grid_with, radial_maxima, DensityGrid, DensityOptions, GridMetadata, DEFAULT_RESOLUTION_CAP,
};
pub use laguerre::{laguerre, laguerre_log_coefficients, ln_factorial, ln_factorial_ratio, ln_upper_incomplete_gamma};

use crate::error::{Error, Result};
use crate::params::{EffectiveParams, QuantumNumbers};
use crate::scalar::Scalar;

/// A stationary state of the effective oscillator.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Eigenstate<T> {
    pub params: EffectiveParams<T>,
    pub q: QuantumNumbers,
    length_scale: T,
}

impl<T: Scalar> Eigenstate<T> {
    pub fn new(params: EffectiveParams<T>, q: QuantumNumbers) -> Self {
        Self { params, q, length_scale: params.length_scale() }
    }

    /// `sqrt(hbar / (M Omega))`, m.
    pub fn length_scale(&self) -> T {
        self.length_scale
    }

    fn alpha(&self) -> u64 {
        self.q.m_l.unsigned_abs()
    }

    /// `ln(n_r! / (n_r + |m_l|)!)`.
    fn ln_norm_ratio(&self) -> f64 {
        -ln_factorial_ratio(self.q.n_r + self.alpha(), self.q.n_r)
    }

    /// Integration cutoff `l sqrt(2(2 n_r + |m_l|) + 40)`.
    pub fn cutoff_radius(&self) -> T {
        self.length_scale * T::of(2.0 * self.q.shell() as f64 + 40.0).sqrt()
    }

    /// `ln(u^alpha e^{-u} n!/(n+alpha)!)`, the smooth envelope without the
    /// polynomial factor.
    fn ln_envelope(&self, u: T) -> T {
        let alpha = self.alpha();
        let power = if alpha == 0 { T::zero() } else { T::of_usize(alpha as usize) * u.ln() };
        T::of(self.ln_norm_ratio()) + power - u
    }

    fn reduced_radius_sq(&self, r: T) -> T {
        let x = r / self.length_scale;
        x * x
    }
}

/// Signed radial amplitude `f(r)` with `Psi = f(r) e^{i m_l phi}`, m^-1.
pub fn psi_amplitude<T: Scalar>(s: &Eigenstate<T>, r: T) -> T {
    let u = s.reduced_radius_sq(r);
    let l = s.length_scale();
    let prefactor = T::one() / (T::PI().sqrt() * l);
    prefactor * (s.ln_envelope(u) / T::of(2.0)).exp() * laguerre(s.q.n_r as usize, s.alpha() as usize, u)
}

/// Probability density `|Psi(r, phi)|^2`, m^-2. Independent of `phi`.
pub fn psi_squared<T: Scalar>(s: &Eigenstate<T>, r: T, _phi: T) -> T {
    let u = s.reduced_radius_sq(r);
    let l = s.length_scale();
    let lag = laguerre(s.q.n_r as usize, s.alpha() as usize, u);
    s.ln_envelope(u).exp() * lag * lag / (T::PI() * l * l)
}

fn quadrature_tolerance<T: Scalar>() -> T {
    T::of(1e-11).max(T::epsilon() * T::of(100.0))
}

/// `int_{u_c}^inf (u^alpha e^{-u}) P_a(u) P_b(u) du * sqrt(ratio_a ratio_b)`
/// from the power series of both Laguerre factors and the closed-form
/// incomplete gamma function.
fn analytic_tail(alpha: u64, n_a: u64, n_b: u64, u_c: f64) -> f64 {
    let ca = laguerre_log_coefficients(n_a, alpha);
    let cb = laguerre_log_coefficients(n_b, alpha);
    let ln_norm = -0.5 * (ln_factorial_ratio(n_a + alpha, n_a) + ln_factorial_ratio(n_b + alpha, n_b));
    let mut total = 0.0;
    for (i, (si, li)) in ca.iter().enumerate() {
        for (j, (sj, lj)) in cb.iter().enumerate() {
            let a = alpha + i as u64 + j as u64 + 1;
            total += si * sj * (li + lj + ln_norm + ln_upper_incomplete_gamma(a, u_c)).exp();
        }
    }
    total
}

/// `int |Psi|^2 dA` by adaptive Gauss-Legendre on `[0, r_cut]` plus the exact
/// tail beyond `r_cut`.
pub fn normalization_check<T: Scalar>(s: &Eigenstate<T>) -> Result<T> {
    let r_cut = s.cutoff_radius();
    let two_pi = T::PI() + T::PI();
    let core = quadrature::integrate(|r| two_pi * r * psi_squared(s, r, T::zero()), T::zero(), r_cut, quadrature_tolerance())?;
    let u_c = s.reduced_radius_sq(r_cut).as_f64();
    Ok(core + T::of(analytic_tail(s.alpha(), s.q.n_r, s.q.n_r, u_c)))
}

/// Overlap `int Psi_1^* Psi_2 dA` of two states of the same oscillator.
///
/// Different `m_l` are orthogonal through the angular integral and return
/// exactly zero without quadrature.
pub fn orthogonality_check<T: Scalar>(a: &Eigenstate<T>, b: &Eigenstate<T>) -> Result<T> {
    if a.params != b.params {
        return Err(Error::Domain("overlap needs both states on the same effective oscillator".into()));
    }
    if a.q.m_l != b.q.m_l {
        return Ok(T::zero());
    }
    let r_cut = a.cutoff_radius().max(b.cutoff_radius());
    let two_pi = T::PI() + T::PI();
    let core = quadrature::integrate(
        |r| two_pi * r * psi_amplitude(a, r) * psi_amplitude(b, r),
        T::zero(),
        r_cut,
        quadrature_tolerance(),
    )?;
    let u_c = a.reduced_radius_sq(r_cut).as_f64();
    Ok(core + T::of(analytic_tail(a.alpha(), a.q.n_r, b.q.n_r, u_c)))
}

/// Root-mean-square radius `l sqrt(2 n_r + |m_l| + 1)`, m.
pub fn density_spread_metric<T: Scalar>(s: &Eigenstate<T>) -> T {
    s.length_scale() * T::of_usize(s.q.shell() as usize + 1).sqrt()
}

/// Sign changes of the radial amplitude on `(0, r_cut)`, sampled finely.
pub fn radial_node_count<T: Scalar>(s: &Eigenstate<T>) -> usize {
    let r_cut = s.cutoff_radius();
    let samples = 4000 * (s.q.n_r as usize + 1);
    let mut count = 0;
    let mut last_sign = 0i8;
    for i in 1..samples {
        let r = r_cut * T::of_usize(i) / T::of_usize(samples);
        let v = laguerre(s.q.n_r as usize, s.alpha() as usize, s.reduced_radius_sq(r));
        let sign = if v > T::zero() { 1 } else if v < T::zero() { -1 } else { 0 };
        if sign != 0 {
            if last_sign != 0 && sign != last_sign {
                count += 1;
            }
            last_sign = sign;
        }
    }
    count
}
