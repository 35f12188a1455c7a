//! Pointwise check that the closed-form eigenfunctions satisfy the radial
//! equation in reduced form (`x = r / l`, energies in units of `hbar Omega`):
//!
//! ```text
//! -1/2 (f'' + f'/x - m^2 f / x^2) + x^2 f / 2 - m (gamma/Omega) f = (E / hbar Omega) f
//! ```
//!
//! Derivatives use five-point stencils on `f` itself, which is smooth at the
//! origin; differencing `sqrt(x) f` instead loses two orders of accuracy at
//! small `x` to the `sqrt` singularity.

use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::spectrum::energy_coefficient;
use crate::wavefunctions::{laguerre, laguerre_log_coefficients, psi_amplitude, Eigenstate};

/// Default finite-difference step in units of the oscillator length. Smaller
/// steps are dominated by cancellation in the second difference.
pub const DEFAULT_RESIDUAL_STEP: f64 = 1e-3;

/// Relative half-width of the exclusion zone around radial nodes.
const NODE_GUARD: f64 = 1e-3;

/// Largest `|H f - E f| / |E f|` over the sample radii (physical units).
pub fn hamiltonian_residual<T: Scalar>(s: &Eigenstate<T>, sample_r: &[T], step: Option<T>) -> Result<T> {
    let l = s.length_scale();
    let h = step.unwrap_or(T::of(DEFAULT_RESIDUAL_STEP));
    if !(h > T::zero() && h.is_finite()) {
        return Err(Error::Domain(format!("step must be positive, got {h:e}")));
    }
    let m = s.q.m_l;
    let m2 = T::of_i64(m * m);
    let lambda = energy_coefficient(s.params.ratio(), s.q);
    let shift = T::of_i64(m) * s.params.ratio();
    let r_cut = s.cutoff_radius();
    let coeffs = laguerre_log_coefficients(s.q.n_r, s.q.m_l.unsigned_abs());
    let radial = |x: T| psi_amplitude(s, x * l);
    let half = T::of(0.5);

    let mut worst = T::zero();
    for &r in sample_r {
        if !(r > T::zero() && r < r_cut) {
            return Err(Error::Domain(format!("sample radius {r:e} outside (0, {r_cut:e})")));
        }
        let x = r / l;
        let u = x * x;
        let scale: f64 = coeffs
            .iter()
            .enumerate()
            .map(|(i, (_, ln_c))| (ln_c + i as f64 * u.as_f64().ln()).exp())
            .sum();
        let lag = laguerre(s.q.n_r as usize, s.q.m_l.unsigned_abs() as usize, u).as_f64();
        if x < T::of(8.0) * h || lag.abs() < NODE_GUARD * scale {
            return Err(Error::SingularSample { r: r.as_f64() });
        }
        let r0 = radial(x);
        let d2 = (-radial(x + h + h)
            + T::of(16.0) * radial(x + h)
            - T::of(30.0) * r0
            + T::of(16.0) * radial(x - h)
            - radial(x - h - h))
            / (T::of(12.0) * h * h);
        let d1 = (-radial(x + h + h) + T::of(8.0) * radial(x + h) - T::of(8.0) * radial(x - h) + radial(x - h - h))
            / (T::of(12.0) * h);
        let h_r = -half * (d2 + d1 / x - m2 * r0 / u) + half * u * r0 - shift * r0;
        let rel = (h_r - lambda * r0).abs() / (lambda * r0).abs();
        worst = worst.max(rel);
    }
    Ok(worst)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::params::{effective_params, PhysicalParams, QuantumNumbers};

    fn state(b: f64, t: f64, n_r: u64, m_l: i64) -> Eigenstate<f64> {
        let e = effective_params(&PhysicalParams::dimensionless(b, t).unwrap()).unwrap();
        Eigenstate::new(e, QuantumNumbers::new(n_r, m_l))
    }

    #[test]
    fn ground_state_example() {
        let s = state(0.0, 0.5f64.sqrt(), 0, 0);
        let l = s.length_scale();
        let r: Vec<f64> = (1..=50).map(|i| 0.1 * i as f64 * l).collect();
        let v = hamiltonian_residual(&s, &r, None).unwrap();
        assert!(v <= 1e-8, "{v:e}");
    }

    #[test]
    fn excited_states_in_all_cases() {
        for (b, t) in [(0.0, 1.2), (1.0, 1.0), (0.4, 0.6)] {
            for (n, m) in [(1, 0), (2, 3), (3, -2), (0, 5)] {
                let s = state(b, t, n, m);
                let l = s.length_scale();
                let r: Vec<f64> = (1..=40)
                    .map(|i| 0.15 * i as f64 * l)
                    .filter(|r| hamiltonian_residual(&s, &[*r], None).is_ok())
                    .collect();
                assert!(r.len() > 30);
                let v = hamiltonian_residual(&s, &r, None).unwrap();
                assert!(v <= 1e-6, "({b},{t}) ({n},{m}): {v:e}");
            }
        }
    }

    #[test]
    fn radial_nodes_are_refused() {
        let s = state(0.3, 0.3, 1, 1);
        let l = s.length_scale();
        assert!(hamiltonian_residual(&s, &[1.0 * l], None).unwrap() < 1e-6);
        let lag_zero = (2.0f64).sqrt() * l; // L_1^1(u) = 2 - u vanishes at u = 2
        assert!(matches!(hamiltonian_residual(&s, &[lag_zero], None), Err(Error::SingularSample { .. })));
    }

    #[test]
    fn rejects_out_of_range_samples() {
        let s = state(0.0, 1.0, 0, 0);
        assert!(matches!(hamiltonian_residual(&s, &[0.0], None), Err(Error::Domain(_))));
        assert!(matches!(hamiltonian_residual(&s, &[1e9], None), Err(Error::Domain(_))));
        assert!(matches!(hamiltonian_residual(&s, &[1e-6], None), Err(Error::SingularSample { .. })));
    }
}
