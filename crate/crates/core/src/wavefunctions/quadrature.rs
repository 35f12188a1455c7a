//! Composite Gauss-Legendre quadrature with panel doubling.

use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::scalar::Scalar;

const ORDER: usize = 20;
const START_PANELS: usize = 8;
const MAX_PANELS: usize = 8192;

/// Nodes and weights of the `n`-point rule on `[-1, 1]` (Newton on `P_n`).
pub fn gauss_legendre(n: usize) -> (Vec<f64>, Vec<f64>) {
    let mut nodes = vec![0.0; n];
    let mut weights = vec![0.0; n];
    for i in 0..n.div_ceil(2) {
        let mut x = (std::f64::consts::PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
        let mut dp = 0.0;
        for _ in 0..100 {
            let (mut p0, mut p1) = (1.0, x);
            for j in 2..=n {
                let p2 = ((2 * j - 1) as f64 * x * p1 - (j - 1) as f64 * p0) / j as f64;
                p0 = p1;
                p1 = p2;
            }
            dp = n as f64 * (x * p1 - p0) / (x * x - 1.0);
            let dx = p1 / dp;
            x -= dx;
            if dx.abs() < 1e-16 {
                break;
            }
        }
        let w = 2.0 / ((1.0 - x * x) * dp * dp);
        nodes[i] = -x;
        nodes[n - 1 - i] = x;
        weights[i] = w;
        weights[n - 1 - i] = w;
    }
    (nodes, weights)
}

fn rule() -> &'static (Vec<f64>, Vec<f64>) {
    static RULE: OnceLock<(Vec<f64>, Vec<f64>)> = OnceLock::new();
    RULE.get_or_init(|| gauss_legendre(ORDER))
}

fn composite<T: Scalar>(f: &impl Fn(T) -> T, a: T, b: T, panels: usize) -> T {
    let (nodes, weights) = rule();
    let width = (b - a) / T::of_usize(panels);
    let half = width / T::of(2.0);
    let mut total = T::zero();
    for p in 0..panels {
        let mid = a + width * (T::of_usize(p) + T::of(0.5));
        let mut acc = T::zero();
        for (x, w) in nodes.iter().zip(weights) {
            acc = acc + T::of(*w) * f(mid + half * T::of(*x));
        }
        total = total + acc * half;
    }
    total
}

/// `int_a^b f` to absolute tolerance `tol`, doubling the panel count until
/// two successive estimates agree.
pub fn integrate<T: Scalar>(f: impl Fn(T) -> T, a: T, b: T, tol: T) -> Result<T> {
    let mut panels = START_PANELS;
    let mut prev = composite(&f, a, b, panels);
    let mut change = T::infinity();
    while panels < MAX_PANELS {
        panels *= 2;
        let next = composite(&f, a, b, panels);
        change = (next - prev).abs();
        if change <= tol {
            return Ok(next);
        }
        prev = next;
    }
    Err(Error::QuadratureFailure { tolerance: tol.as_f64(), panels, change: change.as_f64() })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rule_integrates_polynomials_exactly() {
        let (x, w) = gauss_legendre(ORDER);
        assert!((w.iter().sum::<f64>() - 2.0).abs() < 1e-14);
        for deg in 0..(2 * ORDER) {
            let approx: f64 = x.iter().zip(&w).map(|(x, w)| w * x.powi(deg as i32)).sum();
            let exact = if deg % 2 == 1 { 0.0 } else { 2.0 / (deg as f64 + 1.0) };
            assert!((approx - exact).abs() < 1e-13, "degree {deg}");
        }
    }

    #[test]
    fn gaussian_integral() {
        let v = integrate(|x: f64| (-x * x).exp(), 0.0, 10.0, 1e-14).unwrap();
        assert!((v - std::f64::consts::PI.sqrt() / 2.0).abs() < 1e-14);
    }

    #[test]
    fn reports_failure() {
        // a jump defeats smooth-rule convergence at the requested tolerance
        let r = integrate(|x: f64| if x < 1.0 / 3.0 { 0.0 } else { 1.0 }, 0.0, 1.0, 1e-15);
        assert!(matches!(r, Err(Error::QuadratureFailure { .. })));
    }
}
