//! Finite-difference eigenvalues of the radial problem
//!
//! ```text
//! -hbar^2/2M (f'' + f'/r - m^2 f/r^2) + M Omega^2 r^2 f / 2 - m hbar gamma f = E f
//! ```
//!
//! The operator is discretised in flux form, `-(1/r)(r f')'` with fluxes at
//! the half nodes `r +- h/2`, and symmetrised through `u_i = sqrt(r_i) f_i`,
//! which is the `u = sqrt(r) R` representation without a first-derivative
//! term. The plain three-point stencil of `u'' - (m^2 - 1/4) u / r^2` is
//! second order for `m != 0` but does not converge usefully at `m = 0`,
//! where `u ~ sqrt(r)` is not smooth; the flux form is second order for all
//! `m` because the regularity condition `f'(0) = 0` enters as `f_0 = f_1`.

use crate::error::{Error, Result};
use crate::params::EffectiveParams;
use crate::scalar::Scalar;

use super::tridiagonal::lowest_eigenvalues;

/// Uniform interior nodes `r_i = i * r_max / (n_points + 1)`, `i = 1..=n_points`,
/// with Dirichlet conditions at `r_max`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RadialGrid<T> {
    pub r_max: T,
    pub n_points: usize,
}

impl<T: Scalar> RadialGrid<T> {
    pub fn new(r_max: T, n_points: usize) -> Result<Self> {
        if !(r_max.is_finite() && r_max > T::zero()) || n_points < 2 {
            return Err(Error::Domain(format!("need r_max > 0 and n_points >= 2, got {r_max:e}, {n_points}")));
        }
        Ok(Self { r_max, n_points })
    }

    pub fn spacing(&self) -> T {
        self.r_max / T::of_usize(self.n_points + 1)
    }

    pub fn node(&self, i: usize) -> T {
        self.spacing() * T::of_usize(i)
    }
}

/// Diagonal and off-diagonal of the symmetrised operator in units of
/// `hbar Omega`, lengths in units of `sqrt(hbar / (M Omega))`, before the
/// `-m hbar gamma` shift.
pub fn fd_radial_matrix<T: Scalar>(e: &EffectiveParams<T>, m_l: i64, grid: &RadialGrid<T>) -> (Vec<T>, Vec<T>) {
    let h = grid.spacing() / e.length_scale();
    let half = T::of(0.5);
    let h2 = h * h;
    let m2 = T::of_i64(m_l * m_l);
    let n = grid.n_points;
    let x = |i: usize| h * T::of_usize(i);
    let mut diag = Vec::with_capacity(n);
    for i in 1..=n {
        let xi = x(i);
        let (plus, minus) = (xi + h * half, xi - h * half);
        let mut d = (plus + minus) / (T::of(2.0) * h2 * xi) + half * m2 / (xi * xi) + half * xi * xi;
        if i == 1 && m_l == 0 {
            d = d - minus / (T::of(2.0) * h2 * xi);
        }
        diag.push(d);
    }
    let off = (1..n)
        .map(|i| {
            let plus = x(i) + h * half;
            -plus / (T::of(2.0) * h2 * (x(i) * x(i + 1)).sqrt())
        })
        .collect();
    (diag, off)
}

/// The `n_eig` lowest eigenvalues for angular momentum `m_l`, in the energy
/// units of `e`, each converging to `(2j + |m_l| + 1) hbar Omega - m_l hbar gamma`.
pub fn fd_radial_eigenvalues<T: Scalar>(
    e: &EffectiveParams<T>,
    m_l: i64,
    grid: &RadialGrid<T>,
    n_eig: usize,
) -> Result<Vec<T>> {
    check_grid(e, m_l, grid, n_eig)?;
    let (diag, off) = fd_radial_matrix(e, m_l, grid);
    let shift = T::of_i64(m_l) * e.ratio();
    Ok(lowest_eigenvalues(&diag, &off, n_eig)?
        .into_iter()
        .map(|lambda| (lambda - shift) * e.energy_unit())
        .collect())
}

fn check_grid<T: Scalar>(e: &EffectiveParams<T>, m_l: i64, grid: &RadialGrid<T>, n_eig: usize) -> Result<()> {
    if n_eig == 0 || n_eig > grid.n_points / 4 {
        return Err(Error::GridTooCoarse(format!(
            "{n_eig} eigenvalues need at least {} points, have {}",
            4 * n_eig.max(1),
            grid.n_points
        )));
    }
    let top_shell = T::of_usize(2 * (n_eig - 1) + m_l.unsigned_abs() as usize + 1);
    let turning = (T::of(2.0) * top_shell).sqrt();
    let reach = grid.r_max / e.length_scale();
    if reach < turning + T::of(8.0) {
        return Err(Error::GridTooCoarse(format!(
            "r_max is {:.3} oscillator lengths; the highest requested state needs {:.3}",
            reach.as_f64(),
            (turning + T::of(8.0)).as_f64()
        )));
    }
    let h = grid.spacing() / e.length_scale();
    if h * turning > T::of(0.5) {
        return Err(Error::GridTooCoarse(format!(
            "spacing {:.3e} oscillator lengths does not resolve the highest requested state",
            h.as_f64()
        )));
    }
    Ok(())
}

/// Richardson extrapolation of two grids assuming an `O(h^2)` error.
pub fn fd_radial_richardson<T: Scalar>(
    e: &EffectiveParams<T>,
    m_l: i64,
    r_max: T,
    coarse_points: usize,
    fine_points: usize,
    n_eig: usize,
) -> Result<Vec<T>> {
    let coarse = RadialGrid::new(r_max, coarse_points)?;
    let fine = RadialGrid::new(r_max, fine_points)?;
    let a = fd_radial_eigenvalues(e, m_l, &coarse, n_eig)?;
    let b = fd_radial_eigenvalues(e, m_l, &fine, n_eig)?;
    let (h1, h2) = (coarse.spacing(), fine.spacing());
    let (w1, w2) = (h1 * h1, h2 * h2);
    Ok(a.iter().zip(&b).map(|(&ea, &eb)| (w1 * eb - w2 * ea) / (w1 - w2)).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::params::{effective_params, PhysicalParams, QuantumNumbers};
    use crate::spectrum::energy;

    fn params(b: f64, t: f64) -> EffectiveParams<f64> {
        effective_params(&PhysicalParams::dimensionless(b, t).unwrap()).unwrap()
    }

    fn analytic(e: &EffectiveParams<f64>, m_l: i64, n: usize) -> Vec<f64> {
        (0..n).map(|j| energy(e, QuantumNumbers::new(j as u64, m_l))).collect()
    }

    #[test]
    fn field_free_m0_example() {
        let e = params(0.0, 0.5f64.sqrt());
        let ev = fd_radial_richardson(&e, 0, 20.0, 2000, 4000, 4).unwrap();
        for (a, b) in ev.iter().zip(analytic(&e, 0, 4)) {
            assert!((a - b).abs() / b < 1e-6, "{a} vs {b}");
        }
    }

    #[test]
    fn saturated_negative_m_example() {
        let e = params(1.0, 1.0);
        let ev = fd_radial_richardson(&e, -2, 20.0 * e.length_scale(), 2000, 4000, 4).unwrap();
        for (j, a) in ev.iter().enumerate() {
            let expect = (2 * j + 5) as f64;
            assert!((a - expect).abs() / expect < 1e-6, "{a} vs {expect}");
        }
    }

    #[test]
    fn ground_state_positive() {
        let e = params(0.2, 0.3);
        let grid = RadialGrid::new(20.0, 400).unwrap();
        assert!(fd_radial_eigenvalues(&e, 0, &grid, 1).unwrap()[0] > 0.0);
    }

    #[test]
    fn second_order_convergence_and_richardson_gain() {
        let e = params(0.3, 0.9);
        for m in [-1, 0, 2] {
            let exact = analytic(&e, m, 3);
            let err = |n: usize| {
                let g = RadialGrid::new(16.0, n).unwrap();
                let v = fd_radial_eigenvalues(&e, m, &g, 3).unwrap();
                (v[2] - exact[2]).abs()
            };
            let (e1, e2) = (err(399), err(799));
            let rate = (e1 / e2).log2();
            assert!((rate - 2.0).abs() < 0.15, "m = {m}: rate {rate}");
            let rich = fd_radial_richardson(&e, m, 16.0, 399, 799, 3).unwrap();
            assert!((rich[2] - exact[2]).abs() * 10.0 <= e2, "m = {m}");
        }
    }

    #[test]
    fn grid_checks() {
        let e = params(0.0, 1.0);
        let g = RadialGrid::new(20.0, 40).unwrap();
        assert!(matches!(fd_radial_eigenvalues(&e, 0, &g, 11), Err(Error::GridTooCoarse(_))));
        let g = RadialGrid::new(5.0, 4000).unwrap();
        assert!(matches!(fd_radial_eigenvalues(&e, 0, &g, 4), Err(Error::GridTooCoarse(_))));
        let g = RadialGrid::new(20.0, 20).unwrap();
        assert!(matches!(fd_radial_eigenvalues(&e, 10, &g, 4), Err(Error::GridTooCoarse(_))));
        assert!(RadialGrid::new(-1.0, 10).is_err());
    }

    #[test]
    fn matrix_depends_on_effective_parameters_only() {
        let a = effective_params(&PhysicalParams::dimensionless(0.25f64, 1.5).unwrap()).unwrap();
        let b = effective_params(
            &PhysicalParams::new(crate::params::UnitsMode::Dimensionless, 1.0, 1.0, 0.25, 1.5, 1.0).unwrap(),
        )
        .unwrap();
        let g = RadialGrid::new(18.0, 300).unwrap();
        for m in [-2, 0, 3] {
            let (da, oa) = fd_radial_matrix(&a, m, &g);
            let (db, ob) = fd_radial_matrix(&b, m, &g);
            assert!(da.iter().zip(&db).all(|(x, y)| x.to_bits() == y.to_bits()));
            assert!(oa.iter().zip(&ob).all(|(x, y)| x.to_bits() == y.to_bits()));
        }
    }

    #[test]
    fn si_grid_matches_reduced_grid() {
        let p = PhysicalParams::si(9.109e-31, 1.518e16, 0.0, 5.395e-21, crate::params::HBAR_SI).unwrap();
        let e = effective_params(&p).unwrap();
        let r_max = 20.0 * e.length_scale();
        let ev = fd_radial_richardson(&e, 1, r_max, 2000, 4000, 3).unwrap();
        for (a, b) in ev.iter().zip(analytic(&e, 1, 3)) {
            assert!((a - b).abs() / b < 1e-6);
        }
    }
}
