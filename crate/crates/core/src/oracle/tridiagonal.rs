//! Lowest eigenvalues of a real symmetric tridiagonal matrix by Sturm
//! bisection. Deterministic, no iteration-order dependence.

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Number of eigenvalues strictly below `lambda` (negative LDL^T pivots).
pub fn sturm_count<T: Scalar>(diag: &[T], off: &[T], lambda: T) -> usize {
    let tiny = T::min_positive_value().sqrt();
    let mut count = 0;
    let mut q = T::one();
    for i in 0..diag.len() {
        let coupling = if i == 0 { T::zero() } else { off[i - 1] * off[i - 1] / q };
        q = diag[i] - lambda - coupling;
        if q == T::zero() {
            q = -tiny;
        }
        if q < T::zero() {
            count += 1;
        }
    }
    count
}

fn gershgorin<T: Scalar>(diag: &[T], off: &[T]) -> (T, T) {
    let mut lo = T::infinity();
    let mut hi = T::neg_infinity();
    for i in 0..diag.len() {
        let left = if i > 0 { off[i - 1].abs() } else { T::zero() };
        let right = if i < off.len() { off[i].abs() } else { T::zero() };
        lo = lo.min(diag[i] - left - right);
        hi = hi.max(diag[i] + left + right);
    }
    (lo, hi)
}

/// The `count` smallest eigenvalues in ascending order.
pub fn lowest_eigenvalues<T: Scalar>(diag: &[T], off: &[T], count: usize) -> Result<Vec<T>> {
    let n = diag.len();
    if off.len() + 1 != n && !(n == 0 && off.is_empty()) {
        return Err(Error::ConvergenceFailure(format!(
            "off-diagonal has {} entries for a {n}x{n} matrix",
            off.len()
        )));
    }
    if count > n {
        return Err(Error::ConvergenceFailure(format!("asked for {count} eigenvalues of a {n}x{n} matrix")));
    }
    if diag.iter().chain(off).any(|v| !v.is_finite()) {
        return Err(Error::ConvergenceFailure("matrix has non-finite entries".into()));
    }
    let (lo0, hi0) = gershgorin(diag, off);
    let pad = (hi0 - lo0).abs().max(T::one()) * T::epsilon() * T::of(4.0);
    let (lo0, hi0) = (lo0 - pad, hi0 + pad);
    let mut out = Vec::with_capacity(count);
    for k in 0..count {
        // k-th eigenvalue: smallest lambda with more than k eigenvalues below it
        let (mut lo, mut hi) = (lo0, hi0);
        for _ in 0..256 {
            let mid = (lo + hi) / T::of(2.0);
            if mid <= lo || mid >= hi {
                break;
            }
            if sturm_count(diag, off, mid) > k {
                hi = mid;
            } else {
                lo = mid;
            }
        }
        out.push((lo + hi) / T::of(2.0));
    }
    Ok(out)
}
