//! Truncated Fock-space matrices of the noncommutative phase-space
//! variables, built from ordinary canonical `x, y, p_x, p_y`.
//!
//! Everything is expressed in reduced units (`hbar = m = omega = 1`, field
//! `b`, noncommutativity `t`), so residuals are dimensionless and comparable
//! across parameter sets. The one-dimensional ladder operator is truncated at
//! `n_1d` levels; the canonical commutator then fails only on the top level,
//! so residuals are evaluated on the block with total excitation at most
//! `n_1d - margin`.

use std::collections::BTreeMap;

use nalgebra::DMatrix;
use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::params::PhysicalParams;

pub type OperatorMatrix = DMatrix<Complex64>;

#[derive(Debug, Clone)]
pub struct NcOperators {
    pub n_1d: usize,
    /// Reduced field `b` and noncommutativity `t`.
    pub field: f64,
    pub theta: f64,
    pub x: OperatorMatrix,
    pub y: OperatorMatrix,
    pub px: OperatorMatrix,
    pub py: OperatorMatrix,
    pub big_x: OperatorMatrix,
    pub big_y: OperatorMatrix,
    pub pi_x: OperatorMatrix,
    pub pi_y: OperatorMatrix,
    pub lz: OperatorMatrix,
}

fn kron(a: &OperatorMatrix, b: &OperatorMatrix) -> OperatorMatrix {
    a.kronecker(b)
}

fn scaled(a: &OperatorMatrix, s: f64) -> OperatorMatrix {
    a * Complex64::new(s, 0.0)
}

/// Builds the operator set for `p` on a `n_1d^2`-dimensional product basis.
pub fn build_nc_operators(p: &PhysicalParams<f64>, n_1d: usize) -> Result<NcOperators> {
    if n_1d < 4 {
        return Err(Error::Domain(format!("truncation needs at least 4 levels per axis, got {n_1d}")));
    }
    let b = p.reduced_field();
    let t = p.reduced_theta();
    let root = (1.0 - b * t).max(0.0).sqrt();
    // Pi_x = c y + d p_x, Pi_y = -c x + d p_y with 2cd = b and the
    // mixed commutators [X, Pi_x] = [Y, Pi_y] = i
    let c = b / (1.0 + root);
    let d = (1.0 + root) / 2.0;

    let a = DMatrix::from_fn(n_1d, n_1d, |i, j| {
        if j == i + 1 {
            Complex64::new((j as f64).sqrt(), 0.0)
        } else {
            Complex64::new(0.0, 0.0)
        }
    });
    let ad = a.adjoint();
    let id = OperatorMatrix::identity(n_1d, n_1d);
    let s = std::f64::consts::FRAC_1_SQRT_2;
    let q1 = scaled(&(&a + &ad), s);
    let p1 = (&ad - &a) * Complex64::new(0.0, s);

    let x = kron(&q1, &id);
    let y = kron(&id, &q1);
    let px = kron(&p1, &id);
    let py = kron(&id, &p1);
    let big_x = &x - scaled(&py, t / 2.0);
    let big_y = &y + scaled(&px, t / 2.0);
    let pi_x = scaled(&y, c) + scaled(&px, d);
    let pi_y = scaled(&x, -c) + scaled(&py, d);
    let lz = &x * &py - &y * &px;
    Ok(NcOperators { n_1d, field: b, theta: t, x, y, px, py, big_x, big_y, pi_x, pi_y, lz })
}

/// Basis indices whose total excitation is at most `n_1d - margin`.
pub fn low_block(n_1d: usize, margin: usize) -> Vec<usize> {
    let top = n_1d.saturating_sub(margin);
    (0..n_1d * n_1d).filter(|i| i / n_1d + i % n_1d <= top).collect()
}

fn block_max_deviation(m: &OperatorMatrix, target: Complex64, block: &[usize]) -> f64 {
    let mut worst: f64 = 0.0;
    for &i in block {
        for &j in block {
            let expect = if i == j { target } else { Complex64::new(0.0, 0.0) };
            worst = worst.max((m[(i, j)] - expect).norm());
        }
    }
    worst
}

/// `[A, B]` restricted to `block x block`; the inner sum still runs over the
/// full truncated basis.
fn block_commutator(a: &OperatorMatrix, b: &OperatorMatrix, block: &[usize]) -> OperatorMatrix {
    a.select_rows(block) * b.select_columns(block) - b.select_rows(block) * a.select_columns(block)
}

/// Max-entry deviation of each defining commutator from its target on the
/// low-excitation block, in reduced units.
pub fn commutator_residuals(ops: &NcOperators, margin: usize) -> Result<BTreeMap<String, f64>> {
    if margin < 2 || margin >= ops.n_1d {
        return Err(Error::Domain(format!("margin must be in [2, {}), got {margin}", ops.n_1d)));
    }
    let block = low_block(ops.n_1d, margin);
    let i = Complex64::new(0.0, 1.0);
    let zero = Complex64::new(0.0, 0.0);
    let checks: [(&str, &OperatorMatrix, &OperatorMatrix, Complex64); 6] = [
        ("[X,Y]", &ops.big_x, &ops.big_y, i * ops.theta),
        ("[Pi_x,Pi_y]", &ops.pi_x, &ops.pi_y, i * ops.field),
        ("[X,Pi_x]", &ops.big_x, &ops.pi_x, i),
        ("[Y,Pi_y]", &ops.big_y, &ops.pi_y, i),
        ("[X,Pi_y]", &ops.big_x, &ops.pi_y, zero),
        ("[Y,Pi_x]", &ops.big_y, &ops.pi_x, zero),
    ];
    Ok(checks
        .iter()
        .map(|(name, a, b, target)| {
            let c = block_commutator(a, b, &block);
            let local: Vec<usize> = (0..block.len()).collect();
            (name.to_string(), block_max_deviation(&c, *target, &local))
        })
        .collect())
}

/// `max |A - A^dagger|`.
pub fn hermiticity_residual(a: &OperatorMatrix) -> f64 {
    (a - a.adjoint()).iter().fold(0.0, |acc, z| acc.max(z.norm()))
}

/// `(Pi_x^2 + Pi_y^2)/2 + (X^2 + Y^2)/2` in reduced units, restricted to the
/// low block where every matrix element is exact.
pub fn truncated_hamiltonian(ops: &NcOperators, margin: usize) -> OperatorMatrix {
    let h = (&ops.pi_x * &ops.pi_x + &ops.pi_y * &ops.pi_y + &ops.big_x * &ops.big_x + &ops.big_y * &ops.big_y)
        * Complex64::new(0.5, 0.0);
    let block = low_block(ops.n_1d, margin);
    DMatrix::from_fn(block.len(), block.len(), |i, j| h[(block[i], block[j])])
}

/// Lowest eigenvalue of the restricted Hamiltonian, in units of `hbar omega`.
/// Nested blocks make this a variational upper bound that cannot increase
/// with `n_1d`.
pub fn truncated_ground_energy(ops: &NcOperators, margin: usize) -> f64 {
    truncated_hamiltonian(ops, margin).symmetric_eigen().eigenvalues.iter().copied().fold(f64::INFINITY, f64::min)
}
