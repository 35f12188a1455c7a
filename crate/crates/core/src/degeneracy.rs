//! Exact degeneracy structure.
//!
//! Two levels `(n_r, m_l)` and `(n_r', m_l')` coincide exactly when the ratio
//! `gamma / Omega` is rational and the integer shifts line up, so everything
//! here runs on [`Rational`]. Float evaluations are provided alongside for
//! cross-checks and for inputs that only exist as measured values.

use std::collections::BTreeMap;

use num_integer::Integer;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::params::{classify_case, effective_params, CaseLabel, PhysicalParams, QuantumNumbers, DEFAULT_CASE_TOLERANCE};
use crate::rational::Rational;
use crate::scalar::Scalar;
use crate::spectrum::energy_coefficient_exact;

/// Default cap on the number of states a grouping pass may enumerate.
pub const DEFAULT_STATE_CAP: u64 = 10_000_000;

/// Generator index `(n, k)` of the field-free degenerate noncommutativity
/// `theta = (hbar/(m w)) k / sqrt(n (n + k))`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct CaseIDegeneracySpec {
    n: u64,
    k: u64,
}

impl CaseIDegeneracySpec {
    pub fn new(n: u64, k: u64) -> Result<Self> {
        if n == 0 || k == 0 {
            return Err(Error::InvalidSpec(format!("n and k must be positive, got n = {n}, k = {k}")));
        }
        Ok(Self { n, k })
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn k(&self) -> u64 {
        self.k
    }

    /// `c^2 = k^2 / (n (n + k))`.
    pub fn c_squared(&self) -> Rational {
        Rational::new(self.k * self.k, self.n * (self.n + self.k))
    }
}

/// `kappa = k / (2n + k)`, in lowest terms.
pub fn kappa_from_spec(s: &CaseIDegeneracySpec) -> Rational {
    Rational::new(s.k, 2 * s.n + s.k)
}

/// Degenerate field-free noncommutativity `(hbar/(m w)) k / sqrt(n (n + k))`.
pub fn theta_d_case1<T: Scalar>(mass: T, omega: T, hbar: T, s: &CaseIDegeneracySpec) -> T {
    let n = T::of(s.n as f64);
    let k = T::of(s.k as f64);
    hbar / (mass * omega) * k / (n * (n + k)).sqrt()
}

/// Degenerate noncommutativity for a reduced value `g`: `(hbar/(m w)) g`.
pub fn theta_d_case3<T: Scalar>(mass: T, omega: T, hbar: T, g: &Rational) -> T {
    hbar / (mass * omega) * T::of(g.to_f64())
}

/// `kappa = gamma/Omega = sqrt(1 - 4 hbar^2 / (4 hbar^2 + m^2 w^2 theta^2))`
/// for the field-free case, evaluated as `t / sqrt(4 + t^2)` to avoid the
/// cancellation of the textbook form at small `theta`.
pub fn kappa_from_params<T: Scalar>(p: &PhysicalParams<T>) -> Result<T> {
    if p.field() != T::zero() {
        let found = classify_case(p, T::of(DEFAULT_CASE_TOLERANCE))?;
        return Err(Error::CaseMismatch { expected: "CaseI (B = 0)", found });
    }
    let t = p.reduced_theta();
    Ok(t / (T::of(4.0) + t * t).sqrt())
}

/// `xi = gamma / Omega` for the intermediate regime.
pub fn xi_from_params<T: Scalar>(p: &PhysicalParams<T>) -> Result<T> {
    let found = classify_case(p, T::of(DEFAULT_CASE_TOLERANCE))?;
    if found != CaseLabel::Intermediate {
        return Err(Error::CaseMismatch { expected: "CaseIII (0 < B theta < hbar)", found });
    }
    Ok(effective_params(p)?.ratio())
}

/// `xi` through the unsimplified radical
/// `sqrt(1 - [(B theta)^2 + L^2 - 2 B theta L] / (4 L Omega^2))` (reduced units).
///
/// Loses relative accuracy like `eps / xi^2` when `xi` is small; it exists to
/// cross-check [`xi_from_params`].
pub fn xi_radical_form<T: Scalar>(p: &PhysicalParams<T>) -> Result<T> {
    let e = effective_params(p)?;
    let bt = p.reduced_product();
    let l = e.reduced_l();
    let omega_sq = e.reduced_omega() * e.reduced_omega();
    let bracket = (bt * bt + l * l - T::of(2.0) * bt * l) / (T::of(4.0) * l);
    Ok((T::one() - bracket / omega_sq).max(T::zero()).sqrt())
}

/// Outcome of an exact square-root evaluation.
#[derive(Debug, Clone, PartialEq)]
pub enum ExactRatio {
    Rational(Rational),
    /// The value is irrational; carries its float evaluation.
    NotRational(f64),
}

impl ExactRatio {
    pub fn as_rational(&self) -> Option<&Rational> {
        match self {
            ExactRatio::Rational(r) => Some(r),
            ExactRatio::NotRational(_) => None,
        }
    }

    pub fn to_f64(&self) -> f64 {
        match self {
            ExactRatio::Rational(r) => r.to_f64(),
            ExactRatio::NotRational(v) => *v,
        }
    }
}

/// `gamma / Omega = (b + t) / sqrt(4 + (b - t)^2)` for exact reduced inputs.
///
/// Covers all three regimes: `b = 0` gives kappa, `b t = 1` gives 1.
pub fn ratio_exact(b: &Rational, t: &Rational) -> Result<ExactRatio> {
    if b.is_negative() || !t.is_positive() {
        return Err(Error::Domain(format!("need b >= 0 and t > 0, got b = {b}, t = {t}")));
    }
    if b * t > 1 {
        return Err(Error::ConstraintViolation { product: (b * t).to_f64(), hbar: 1.0 });
    }
    let sum = b + t;
    let radicand = Rational::from(4) + (b - t).pow(2);
    Ok(match radicand.sqrt_exact() {
        Some(root) => ExactRatio::Rational(sum / root),
        None => ExactRatio::NotRational(((&sum * &sum) / radicand).to_f64().sqrt()),
    })
}

/// Exact `xi = (f + g) / sqrt(4 + (f - g)^2)` with `B = f m w`, `theta = g hbar/(m w)`.
pub fn xi_exact(f: &Rational, g: &Rational) -> Result<ExactRatio> {
    if !f.is_positive() {
        return Err(Error::Domain(format!("f must be positive, got {f}")));
    }
    ratio_exact(f, g)
}

/// Which of the two rationalising differences `f - g` a candidate uses.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Branch {
    /// `f - g = 4nk / (n^2 - k^2)`.
    FourNK,
    /// `f - g = (n^2 - k^2) / (nk)`.
    NSquaredMinusKSquared,
}

impl Branch {
    pub const ALL: [Branch; 2] = [Branch::FourNK, Branch::NSquaredMinusKSquared];

    /// The difference `f - g` this branch prescribes.
    pub fn difference(self, n: u64, k: u64) -> Rational {
        let (n, k) = (n as i128, k as i128);
        let (n, k) = (num_bigint::BigInt::from(n), num_bigint::BigInt::from(k));
        let diff_sq = &n * &n - &k * &k;
        match self {
            Branch::FourNK => Rational::new(num_bigint::BigInt::from(4) * &n * &k, diff_sq),
            Branch::NSquaredMinusKSquared => Rational::new(diff_sq, n * k),
        }
    }
}

impl std::fmt::Display for Branch {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Branch::FourNK => "4nk/(n^2-k^2)",
            Branch::NSquaredMinusKSquared => "(n^2-k^2)/(nk)",
        })
    }
}

fn validate_nk(n: u64, k: u64) -> Result<()> {
    if k == 0 || n <= k {
        return Err(Error::InvalidSpec(format!("need n > k >= 1, got n = {n}, k = {k}")));
    }
    if n.gcd(&k) != 1 {
        return Err(Error::InvalidSpec(format!("n = {n} and k = {k} are not coprime")));
    }
    if n % 2 == 1 && k % 2 == 1 {
        return Err(Error::InvalidSpec(format!("n = {n} and k = {k} are both odd")));
    }
    Ok(())
}

fn admissible_g(f_exp: &Rational, g: &Rational) -> bool {
    g.is_positive() && f_exp * g < 1
}

/// A fully validated intermediate-field degeneracy generator.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CaseIIIDegeneracySpec {
    f_exp: Rational,
    n: u64,
    k: u64,
    branch: Branch,
    g: Rational,
}

impl CaseIIIDegeneracySpec {
    pub fn new(f_exp: Rational, n: u64, k: u64, branch: Branch) -> Result<Self> {
        if !f_exp.is_positive() {
            return Err(Error::InvalidSpec(format!("f_exp must be positive, got {f_exp}")));
        }
        validate_nk(n, k)?;
        let g = &f_exp - branch.difference(n, k);
        if !admissible_g(&f_exp, &g) {
            return Err(Error::InvalidSpec(format!(
                "branch {branch} gives g = {g}, outside 0 < g < 1/f_exp"
            )));
        }
        Ok(Self { f_exp, n, k, branch, g })
    }

    pub fn f_exp(&self) -> &Rational {
        &self.f_exp
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn k(&self) -> u64 {
        self.k
    }

    pub fn branch(&self) -> Branch {
        self.branch
    }

    pub fn g(&self) -> &Rational {
        &self.g
    }

    /// The exact `xi` this generator produces.
    pub fn xi(&self) -> Rational {
        match xi_exact(&self.f_exp, &self.g) {
            Ok(ExactRatio::Rational(r)) => r,
            other => unreachable!("generator produced an irrational xi: {other:?}"),
        }
    }
}

/// One admissible `g` for a fixed field scale, with its exact `xi`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct GCandidate {
    pub branch: Branch,
    pub g: Rational,
    pub xi: Rational,
}

/// `g = f_exp - (f - g)` for both branches, keeping those with `0 < g < 1/f_exp`.
pub fn g_candidates(f_exp: &Rational, n: u64, k: u64) -> Result<Vec<GCandidate>> {
    if !f_exp.is_positive() {
        return Err(Error::InvalidSpec(format!("f_exp must be positive, got {f_exp}")));
    }
    validate_nk(n, k)?;
    let out: Vec<GCandidate> = Branch::ALL
        .into_iter()
        .filter_map(|branch| CaseIIIDegeneracySpec::new(f_exp.clone(), n, k, branch).ok())
        .map(|s| GCandidate { branch: s.branch, xi: s.xi(), g: s.g })
        .collect();
    if out.is_empty() {
        return Err(Error::EmptyResult(format!(
            "no admissible g for f_exp = {f_exp}, n = {n}, k = {k}"
        )));
    }
    Ok(out)
}

/// Every field-free generator with `n <= n_max`, `k <= k_max`.
pub fn scan_case_one(n_max: u64, k_max: u64) -> Vec<CaseIDegeneracySpec> {
    (1..=n_max)
        .flat_map(|n| (1..=k_max).map(move |k| CaseIDegeneracySpec { n, k }))
        .collect()
}

/// Every admissible intermediate-field generator with `k < n <= n_max`.
pub fn scan_case_three(f_exp: &Rational, n_max: u64) -> Vec<CaseIIIDegeneracySpec> {
    let mut out = Vec::new();
    for n in 2..=n_max {
        for k in 1..n {
            if validate_nk(n, k).is_err() {
                continue;
            }
            for branch in Branch::ALL {
                if let Ok(s) = CaseIIIDegeneracySpec::new(f_exp.clone(), n, k, branch) {
                    out.push(s);
                }
            }
        }
    }
    out
}

fn verified(candidate: Option<QuantumNumbers>, coefficient: &Rational, kappa: &Rational) -> Option<QuantumNumbers> {
    candidate.filter(|c| energy_coefficient_exact(kappa, *c) == *coefficient)
}

/// Candidate partners of `q` from the positive-`m_l` shift rules
/// `(n_r - n, m_l + 2n + k)` and `(n_r + n, m_l - (2n + k))`, at
/// `kappa = k / (2n + k)`.
///
/// A candidate is kept only if its exact coefficient equals that of `q`;
/// shifts that cross `m_l = 0` leave the regime the rule assumes.
pub fn partners_case_positive(
    q: QuantumNumbers,
    n: u64,
    k: u64,
) -> (Option<QuantumNumbers>, Option<QuantumNumbers>) {
    let kappa = Rational::new(k, 2 * n + k);
    let coefficient = energy_coefficient_exact(&kappa, q);
    let step = (2 * n + k) as i64;
    let lower = q.n_r.checked_sub(n).map(|n_r| QuantumNumbers::new(n_r, q.m_l + step));
    let upper = Some(QuantumNumbers::new(q.n_r + n, q.m_l - step));
    (verified(lower, &coefficient, &kappa), verified(upper, &coefficient, &kappa))
}

/// Candidate partners of `q` from the negative-`m_l` shift rules
/// `(n_r + n + k, m_l + 2n + k)` and `(n_r - (n + k), m_l - (2n + k))`,
/// with the same exact re-verification as [`partners_case_positive`].
pub fn partners_case_negative(
    q: QuantumNumbers,
    n: u64,
    k: u64,
) -> (Option<QuantumNumbers>, Option<QuantumNumbers>) {
    let kappa = Rational::new(k, 2 * n + k);
    let coefficient = energy_coefficient_exact(&kappa, q);
    let step = (2 * n + k) as i64;
    let up = Some(QuantumNumbers::new(q.n_r + n + k, q.m_l + step));
    let down = q.n_r.checked_sub(n + k).map(|n_r| QuantumNumbers::new(n_r, q.m_l - step));
    (verified(up, &coefficient, &kappa), verified(down, &coefficient, &kappa))
}

/// An exact energy (in units of `hbar Omega`) and the states sharing it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EnergyLevel {
    pub coefficient: Rational,
    /// Distinct, sorted by `(n_r, m_l)`.
    pub states: Vec<QuantumNumbers>,
}

impl EnergyLevel {
    pub fn degeneracy(&self) -> usize {
        self.states.len()
    }

    pub fn contains(&self, q: QuantumNumbers) -> bool {
        self.states.binary_search(&q).is_ok()
    }
}

fn box_size(n_r_max: u64, m_l_min: i64, m_l_max: i64) -> u128 {
    if m_l_min > m_l_max {
        return 0;
    }
    (n_r_max as u128 + 1) * ((m_l_max as i128 - m_l_min as i128) as u128 + 1)
}

fn check_budget(states: u128, cap: u64) -> Result<()> {
    if states > cap as u128 {
        return Err(Error::BudgetExceeded { what: "state enumeration", requested: states, cap: cap as u128 });
    }
    Ok(())
}

fn group_box(
    ratio: &Rational,
    n_r_range: std::ops::RangeInclusive<u64>,
    m_l_range: std::ops::RangeInclusive<i64>,
) -> BTreeMap<Rational, Vec<QuantumNumbers>> {
    // rows are independent; merge order is fixed by the BTreeMap and the final sort
    let partial: Vec<Vec<(Rational, QuantumNumbers)>> = n_r_range
        .into_par_iter()
        .map(|n_r| {
            m_l_range
                .clone()
                .map(|m_l| {
                    let q = QuantumNumbers::new(n_r, m_l);
                    (energy_coefficient_exact(ratio, q), q)
                })
                .collect()
        })
        .collect();
    let mut levels: BTreeMap<Rational, Vec<QuantumNumbers>> = BTreeMap::new();
    for (c, q) in partial.into_iter().flatten() {
        levels.entry(c).or_default().push(q);
    }
    for states in levels.values_mut() {
        states.sort_unstable();
    }
    levels
}

/// Brute-force grouping of every state in the box by exact coefficient.
pub fn group_levels(ratio: &Rational, n_r_max: u64, m_l_min: i64, m_l_max: i64) -> Result<Vec<EnergyLevel>> {
    group_levels_with_cap(ratio, n_r_max, m_l_min, m_l_max, DEFAULT_STATE_CAP)
}

pub fn group_levels_with_cap(
    ratio: &Rational,
    n_r_max: u64,
    m_l_min: i64,
    m_l_max: i64,
    cap: u64,
) -> Result<Vec<EnergyLevel>> {
    let size = box_size(n_r_max, m_l_min, m_l_max);
    check_budget(size, cap)?;
    if size == 0 {
        return Ok(Vec::new());
    }
    Ok(group_box(ratio, 0..=n_r_max, m_l_min..=m_l_max)
        .into_iter()
        .map(|(coefficient, states)| EnergyLevel { coefficient, states })
        .collect())
}

/// Sign restriction on `m_l` for [`degeneracy_count_profile`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum MlDomain {
    #[default]
    All,
    NonNegative,
    NonPositive,
}

/// State count per level for every level with coefficient `<= coefficient_max`.
///
/// The enumeration box follows from `coefficient >= 2 n_r + 1` and
/// `coefficient >= (1 -+ ratio)|m_l| + 1` on the two sides of `m_l = 0`, so
/// no member of a reported level lies outside it. At `ratio = 1` the
/// positive side is unbounded and `m_l_limit` must truncate it; when given,
/// `m_l_limit` also caps `|m_l|` for `ratio < 1`.
pub fn degeneracy_count_profile(
    ratio: &Rational,
    coefficient_max: &Rational,
    domain: MlDomain,
    m_l_limit: Option<u64>,
) -> Result<BTreeMap<Rational, usize>> {
    degeneracy_count_profile_with_cap(ratio, coefficient_max, domain, m_l_limit, DEFAULT_STATE_CAP)
}

pub fn degeneracy_count_profile_with_cap(
    ratio: &Rational,
    coefficient_max: &Rational,
    domain: MlDomain,
    m_l_limit: Option<u64>,
    cap: u64,
) -> Result<BTreeMap<Rational, usize>> {
    if !ratio.is_positive() || *ratio > 1 {
        return Err(Error::Domain(format!("ratio must lie in (0, 1], got {ratio}")));
    }
    if *coefficient_max < 1 {
        return Ok(BTreeMap::new());
    }
    let excess = coefficient_max - Rational::one();
    let to_u64 = |r: Rational| -> Result<u64> {
        u64::try_from(r.floor()).map_err(|_| Error::BudgetExceeded {
            what: "quantum-number box",
            requested: u128::MAX,
            cap: cap as u128,
        })
    };
    let n_r_max = to_u64(&excess / Rational::from(2))?;
    let one = Rational::one();
    let positive_bound = if *ratio == 1 {
        m_l_limit.ok_or_else(|| {
            Error::UnboundedDegeneracy("ratio = 1: every level with m_l >= 0 is infinitely degenerate; give an m_l limit".into())
        })?
    } else {
        let b = to_u64(&excess / (&one - ratio))?;
        m_l_limit.map_or(b, |l| b.min(l))
    };
    let negative_bound = {
        let b = to_u64(&excess / (&one + ratio))?;
        m_l_limit.map_or(b, |l| b.min(l))
    };
    let (m_lo, m_hi) = match domain {
        MlDomain::All => (-(negative_bound as i64), positive_bound as i64),
        MlDomain::NonNegative => (0, positive_bound as i64),
        MlDomain::NonPositive => (-(negative_bound as i64), 0),
    };
    check_budget(box_size(n_r_max, m_lo, m_hi), cap)?;
    Ok(group_box(ratio, 0..=n_r_max, m_lo..=m_hi)
        .into_iter()
        .take_while(|(c, _)| c <= coefficient_max)
        .map(|(c, states)| (c, states.len()))
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::params::HBAR_SI;

    fn q(n_r: u64, m_l: i64) -> QuantumNumbers {
        QuantumNumbers::new(n_r, m_l)
    }

    fn r(s: &str) -> Rational {
        s.parse().unwrap()
    }

    #[test]
    fn kappa_examples() {
        let k = |n, k| kappa_from_spec(&CaseIDegeneracySpec::new(n, k).unwrap());
        assert_eq!(k(1, 1), r("1/3"));
        assert_eq!(k(1, 2), r("1/2"));
        assert_eq!(k(3, 2), r("1/4"));
        assert_eq!(k(7, 7), r("1/3"));
        assert!(CaseIDegeneracySpec::new(0, 1).is_err());
    }

    #[test]
    fn kappa_matches_float_c_squared_route() {
        for n in 1..30 {
            for k in 1..30 {
                let s = CaseIDegeneracySpec::new(n, k).unwrap();
                let c2 = s.c_squared().to_f64();
                let float = (c2 / (4.0 + c2)).sqrt();
                assert!((float - kappa_from_spec(&s).to_f64()).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn theta_d_examples() {
        let s = CaseIDegeneracySpec::new(1, 1).unwrap();
        let theta = theta_d_case1(9.109e-31, 1.518e16, HBAR_SI, &s);
        assert!((theta / 5.395e-21 - 1.0).abs() < 1e-3);
        assert!((theta_d_case1(1.0, 1.0, 1.0, &s) - 0.5f64.sqrt()).abs() < 1e-15);
        let s = CaseIDegeneracySpec::new(2, 2).unwrap();
        assert!((theta_d_case1(1.0, 1.0, 1.0, &s) - 0.5f64.sqrt()).abs() < 1e-15);
    }

    #[test]
    fn kappa_from_params_examples() {
        let p = PhysicalParams::dimensionless(0.0, 0.5f64.sqrt()).unwrap();
        assert!((kappa_from_params(&p).unwrap() - 1.0 / 3.0).abs() < 1e-12);

        let t = 1e-8f64;
        let p = PhysicalParams::dimensionless(0.0, t).unwrap();
        let taylor = t / 2.0 * (1.0 - t * t / 8.0);
        assert!((kappa_from_params(&p).unwrap() / taylor - 1.0).abs() < 1e-12);

        let p = PhysicalParams::dimensionless(0.0, 2.0).unwrap();
        assert!((kappa_from_params(&p).unwrap() - 0.5f64.sqrt()).abs() < 1e-15);
        // c = 2 is off the generator set: the exact route reports irrational
        assert!(matches!(ratio_exact(&r("0"), &r("2")).unwrap(), ExactRatio::NotRational(_)));

        let p = PhysicalParams::dimensionless(0.5, 1.0).unwrap();
        assert!(matches!(kappa_from_params(&p), Err(Error::CaseMismatch { .. })));
    }

    #[test]
    fn xi_from_params_examples() {
        let p = PhysicalParams::dimensionless(1e-4f64, 1.0 / 400020000.0).unwrap();
        let xi = xi_from_params(&p).unwrap();
        assert!((xi / (40003.0 / 800040001.0) - 1.0).abs() < 1e-12);

        let p = PhysicalParams::dimensionless(0.5f64, 0.5).unwrap();
        assert!((xi_from_params(&p).unwrap() - 0.5).abs() < 1e-15);
        assert!((xi_radical_form(&p).unwrap() - 0.5).abs() < 1e-12);

        let eps = 1e-9;
        let p = PhysicalParams::dimensionless(1.0 - eps, 1.0 - eps).unwrap();
        let xi = xi_from_params(&p).unwrap();
        assert!(xi < 1.0 && xi > 1.0 - 1e-8);

        let p = PhysicalParams::dimensionless(1.0, 1.0).unwrap();
        assert!(matches!(xi_from_params(&p), Err(Error::CaseMismatch { found: CaseLabel::Saturated, .. })));
    }

    #[test]
    fn xi_exact_examples() {
        // 4 * 400020000^2 + 40001^2 = 800040001^2
        let lhs = num_bigint::BigInt::from(4) * num_bigint::BigInt::from(400020000u64).pow(2)
            + num_bigint::BigInt::from(40001u64).pow(2);
        assert_eq!(lhs, num_bigint::BigInt::from(800040001u64).pow(2));

        let xi = xi_exact(&r("1/10000"), &r("1/400020000")).unwrap();
        assert_eq!(xi, ExactRatio::Rational(r("40003/800040001")));
        assert_eq!(xi_exact(&r("1/2"), &r("1/2")).unwrap(), ExactRatio::Rational(r("1/2")));
        match xi_exact(&r("1/2"), &r("1/3")).unwrap() {
            ExactRatio::NotRational(v) => {
                let expect = (5.0 / 6.0) / (145.0f64 / 36.0).sqrt();
                assert!((v - expect).abs() < 1e-15);
            }
            other => panic!("expected irrational, got {other:?}"),
        }
        assert_eq!(ratio_exact(&r("2"), &r("1/2")).unwrap(), ExactRatio::Rational(Rational::one()));
        assert!(xi_exact(&r("0"), &r("1/2")).is_err());
    }

    #[test]
    fn g_candidate_examples() {
        let c = g_candidates(&r("1/10000"), 20001, 20000).unwrap();
        assert_eq!(c.len(), 1);
        assert_eq!(c[0].branch, Branch::NSquaredMinusKSquared);
        assert_eq!(c[0].g, r("1/400020000"));
        assert_eq!(c[0].xi, r("40003/800040001"));

        assert!(matches!(g_candidates(&r("1/10000"), 2, 1), Err(Error::EmptyResult(_))));
        // f = 3: g = 1/3 hits f g = 1, g = 3/2 gives f g = 9/2
        assert!(matches!(g_candidates(&r("3"), 2, 1), Err(Error::EmptyResult(_))));

        assert!(matches!(g_candidates(&r("1"), 3, 1), Err(Error::InvalidSpec(_))));
        assert!(matches!(g_candidates(&r("1"), 4, 2), Err(Error::InvalidSpec(_))));
        assert!(matches!(g_candidates(&r("1"), 1, 2), Err(Error::InvalidSpec(_))));
    }

    #[test]
    fn both_branches_rationalise() {
        for n in 2..40u64 {
            for k in 1..n {
                if validate_nk(n, k).is_err() {
                    continue;
                }
                for f in ["1/3", "2", "7/5", "11"] {
                    if let Ok(cs) = g_candidates(&r(f), n, k) {
                        for c in cs {
                            assert!(matches!(xi_exact(&r(f), &c.g).unwrap(), ExactRatio::Rational(_)));
                            let x = c.xi.to_f64();
                            assert!(x > 0.0 && x < 1.0);
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn positive_partner_examples() {
        assert_eq!(partners_case_positive(q(3, 0), 1, 1), (Some(q(2, 3)), None));
        assert_eq!(partners_case_positive(q(0, 9), 1, 1), (None, Some(q(1, 6))));
        assert_eq!(partners_case_positive(q(0, 0), 1, 1), (None, None));
        assert_eq!(partners_case_positive(q(1, 6), 1, 1), (Some(q(0, 9)), Some(q(2, 3))));
    }

    #[test]
    fn negative_partner_examples() {
        assert_eq!(partners_case_negative(q(0, -6), 1, 1), (Some(q(2, -3)), None));
        assert_eq!(partners_case_negative(q(1, -1), 1, 1), (None, None));
        assert_eq!(partners_case_negative(q(0, -12), 1, 1), (Some(q(2, -9)), None));
        assert_eq!(partners_case_negative(q(4, -6), 1, 1), (Some(q(6, -3)), Some(q(2, -9))));
    }

    #[test]
    fn table_three_row() {
        let levels = group_levels(&r("1/3"), 3, 0, 11).unwrap();
        let seven = levels.iter().find(|l| l.coefficient == 7).unwrap();
        assert_eq!(seven.states, vec![q(0, 9), q(1, 6), q(2, 3), q(3, 0)]);
        assert_eq!(levels[0].coefficient, Rational::one());
        assert_eq!(levels[0].states, vec![q(0, 0)]);
        let total: usize = levels.iter().map(|l| l.degeneracy()).sum();
        assert_eq!(total, 4 * 12);
    }

    #[test]
    fn table_four_row() {
        let levels = group_levels(&r("1/3"), 6, -12, 0).unwrap();
        let level = levels.iter().find(|l| l.coefficient == 17).unwrap();
        assert_eq!(level.states, vec![q(0, -12), q(2, -9), q(4, -6), q(6, -3)]);
    }

    #[test]
    fn landau_ground_level_in_box() {
        let levels = group_levels(&Rational::one(), 2, -2, 2).unwrap();
        assert_eq!(levels[0].coefficient, Rational::one());
        assert_eq!(levels[0].states, vec![q(0, 0), q(0, 1), q(0, 2)]);
    }

    #[test]
    fn grouping_edge_cases() {
        assert!(group_levels(&r("1/3"), 5, 3, 2).unwrap().is_empty());
        assert!(matches!(
            group_levels_with_cap(&r("1/3"), 99, 0, 99, 9_999),
            Err(Error::BudgetExceeded { requested: 10_000, .. })
        ));
    }

    #[test]
    fn profile_counts() {
        let p = degeneracy_count_profile(&r("1/3"), &r("7"), MlDomain::NonNegative, None).unwrap();
        let at = |c: i64| p.get(&Rational::from(c)).copied();
        assert_eq!((at(1), at(3), at(5), at(7)), (Some(1), Some(2), Some(3), Some(4)));
        assert!(p.keys().all(|c| *c <= 7));

        let narrow = degeneracy_count_profile(&Rational::one(), &r("1"), MlDomain::All, Some(3)).unwrap();
        let wide = degeneracy_count_profile(&Rational::one(), &r("1"), MlDomain::All, Some(9)).unwrap();
        assert_eq!(narrow[&Rational::one()], 4);
        assert_eq!(wide[&Rational::one()], 10);

        assert!(matches!(
            degeneracy_count_profile(&Rational::one(), &r("5"), MlDomain::All, None),
            Err(Error::UnboundedDegeneracy(_))
        ));
        assert!(degeneracy_count_profile(&r("0"), &r("5"), MlDomain::All, None).is_err());
        assert!(degeneracy_count_profile(&r("3/2"), &r("5"), MlDomain::All, None).is_err());
    }

    #[test]
    fn profile_box_is_sufficient() {
        // a much larger box must not add members to any level <= coefficient_max
        let kappa = r("2/7");
        let cmax = r("9");
        let p = degeneracy_count_profile(&kappa, &cmax, MlDomain::All, None).unwrap();
        let big = group_levels(&kappa, 40, -60, 60).unwrap();
        for level in big.iter().filter(|l| l.coefficient <= cmax) {
            assert_eq!(p.get(&level.coefficient), Some(&level.degeneracy()), "{}", level.coefficient);
        }
    }

    #[test]
    fn scans() {
        let specs = scan_case_one(3, 2);
        assert_eq!(specs.len(), 6);
        let three = scan_case_three(&r("1/10000"), 8);
        assert!(three.is_empty());
        let three = scan_case_three(&r("2"), 6);
        assert!(!three.is_empty());
        for s in &three {
            assert!(s.g().is_positive() && s.f_exp() * s.g() < 1);
        }
    }
}
