//! Closed-form spectrum `E = (2 n_r + |m_l| + 1) hbar Omega - m_l hbar gamma`.

use crate::params::{EffectiveParams, QuantumNumbers};
use crate::rational::Rational;
use crate::scalar::Scalar;

/// Energy of a state, in the units of `e` (J for SI, `hbar w` for reduced).
pub fn energy<T: Scalar>(e: &EffectiveParams<T>, q: QuantumNumbers) -> T {
    let hbar = e.hbar();
    let shell = T::of_usize(q.shell() as usize) + T::one();
    shell * hbar * e.omega_eff() - T::of_i64(q.m_l) * hbar * e.gamma()
}

/// Energy in units of `hbar Omega` for a floating ratio `gamma / Omega`.
pub fn energy_coefficient<T: Scalar>(ratio: T, q: QuantumNumbers) -> T {
    T::of_usize(q.shell() as usize) + T::one() - T::of_i64(q.m_l) * ratio
}

/// Exact energy in units of `hbar Omega`: `(2 n_r + |m_l| + 1) - m_l ratio`.
///
/// `ratio` is kappa (field-free), xi (intermediate field) or 1 (saturated).
pub fn energy_coefficient_exact(ratio: &Rational, q: QuantumNumbers) -> Rational {
    let shell = Rational::from(q.shell() + 1);
    shell - Rational::from(q.m_l) * ratio
}

/// Smallest energy steps, in units of `hbar Omega`, from raising `m_l > 0`,
/// lowering `m_l < 0`, and raising `n_r`: `(1 - kappa, 1 + kappa, 2)`.
pub fn min_energy_steps(kappa: &Rational) -> (Rational, Rational, Rational) {
    let one = Rational::one();
    (&one - kappa, &one + kappa, Rational::from(2))
}
