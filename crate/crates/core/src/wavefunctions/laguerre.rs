use crate::scalar::Scalar;

/// Associated Laguerre polynomial `L_n^alpha(x)` by the upward recurrence
///
/// ```text
/// n L_n = (2n - 1 + alpha - x) L_{n-1} - (n - 1 + alpha) L_{n-2}
/// ```
pub fn laguerre<T: Scalar>(n: usize, alpha: usize, x: T) -> T {
    let a = T::of_usize(alpha);
    let mut prev = T::one();
    if n == 0 {
        return prev;
    }
    let mut cur = T::one() + a - x;
    for j in 2..=n {
        let jf = T::of_usize(j);
        let next = ((jf + jf - T::one() + a - x) * cur - (jf - T::one() + a) * prev) / jf;
        prev = cur;
        cur = next;
    }
    cur
}

/// `ln(hi! / lo!)` for `lo <= hi`, summed in log space so that large
/// factorials never materialise.
pub fn ln_factorial_ratio(hi: u64, lo: u64) -> f64 {
    debug_assert!(lo <= hi);
    (lo + 1..=hi).map(|i| (i as f64).ln()).sum()
}

pub fn ln_factorial(n: u64) -> f64 {
    ln_factorial_ratio(n, 0)
}

/// Power-series coefficients of `L_n^alpha(x) = sum_i c_i x^i`,
/// `c_i = (-1)^i C(n + alpha, n - i) / i!`, as `(sign, ln|c_i|)`.
pub fn laguerre_log_coefficients(n: u64, alpha: u64) -> Vec<(f64, f64)> {
    (0..=n)
        .map(|i| {
            // ln C(n+a, n-i) = ln (n+a)! - ln (n-i)! - ln (a+i)!
            let ln_binom = ln_factorial_ratio(n + alpha, alpha + i) - ln_factorial(n - i);
            let sign = if i % 2 == 0 { 1.0 } else { -1.0 };
            (sign, ln_binom - ln_factorial(i))
        })
        .collect()
}

/// `ln Gamma(a, x)` for integer `a >= 1`:
/// `Gamma(a, x) = (a-1)! e^{-x} sum_{j<a} x^j / j!`.
pub fn ln_upper_incomplete_gamma(a: u64, x: f64) -> f64 {
    assert!(a >= 1);
    if x <= 0.0 {
        return ln_factorial(a - 1);
    }
    let lx = x.ln();
    let terms: Vec<f64> = (0..a).map(|j| j as f64 * lx - ln_factorial(j)).collect();
    let peak = terms.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    let sum: f64 = terms.iter().map(|t| (t - peak).exp()).sum();
    ln_factorial(a - 1) - x + peak + sum.ln()
}
