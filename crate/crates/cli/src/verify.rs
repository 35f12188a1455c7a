//! Oracle suites run against the configured parameters, with a JSON report.

use clap::ValueEnum;
use ncosc::oracle::{build_nc_operators, commutator_residuals, fd_radial_richardson, hamiltonian_residual};
use ncosc::{energy, normalization_check, orthogonality_check, Eigenstate, Error, QuantumNumbers};
use serde_json::{json, Value};

use crate::config::RunConfig;
use crate::error::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Commutators,
    Fd,
    Residual,
    Normalization,
    All,
}

pub const COMMUTATOR_LEVELS: usize = 16;
pub const COMMUTATOR_MARGIN: usize = 4;
pub const FD_ANGULAR: [i64; 3] = [-2, 0, 3];
pub const FD_LEVELS: usize = 4;
pub const FD_POINTS: (usize, usize) = (2000, 4000);
pub const FD_REACH: f64 = 20.0;
pub const RESIDUAL_STATES: [(u64, i64); 4] = [(0, 0), (1, -2), (2, 3), (3, 1)];
pub const NORMALIZATION_MAX: i64 = 5;

type SuiteFn = fn(&RunConfig) -> Result<SuiteResult, CliError>;

pub struct SuiteResult {
    pub name: &'static str,
    pub passed: bool,
    pub max_residual: f64,
    pub tolerance: f64,
    pub details: Value,
}

impl SuiteResult {
    fn new(name: &'static str, max_residual: f64, tolerance: f64, details: Value) -> Self {
        Self { name, passed: max_residual <= tolerance, max_residual, tolerance, details }
    }

    fn to_json(&self) -> Value {
        json!({
            "name": self.name,
            "passed": self.passed,
            "max_residual": self.max_residual,
            "tolerance": self.tolerance,
            "details": self.details,
        })
    }
}

fn commutators(cfg: &RunConfig) -> Result<SuiteResult, CliError> {
    let ops = build_nc_operators(&cfg.params, COMMUTATOR_LEVELS)?;
    let res = commutator_residuals(&ops, COMMUTATOR_MARGIN)?;
    let worst = res.values().copied().fold(0.0, f64::max);
    let details = json!({ "n_1d": COMMUTATOR_LEVELS, "margin": COMMUTATOR_MARGIN, "residuals": res });
    Ok(SuiteResult::new("commutators", worst, cfg.tolerance("commutators"), details))
}

fn fd(cfg: &RunConfig) -> Result<SuiteResult, CliError> {
    let e = &cfg.effective;
    let mut worst: f64 = 0.0;
    let mut rows = Vec::new();
    for m in FD_ANGULAR {
        let values = fd_radial_richardson(e, m, FD_REACH * e.length_scale(), FD_POINTS.0, FD_POINTS.1, FD_LEVELS)?;
        for (j, v) in values.iter().enumerate() {
            let exact = energy(e, QuantumNumbers::new(j as u64, m));
            let rel = (v - exact).abs() / exact.abs();
            worst = worst.max(rel);
            rows.push(json!({ "n_r": j, "m_l": m, "fd": v, "analytic": exact, "relative_error": rel }));
        }
    }
    let details = json!({ "points": [FD_POINTS.0, FD_POINTS.1], "r_max_lengths": FD_REACH, "levels": rows });
    Ok(SuiteResult::new("fd", worst, cfg.tolerance("fd"), details))
}

fn residual(cfg: &RunConfig) -> Result<SuiteResult, CliError> {
    let mut worst: f64 = 0.0;
    let mut rows = Vec::new();
    for (n_r, m_l) in RESIDUAL_STATES {
        let s = Eigenstate::new(cfg.effective, QuantumNumbers::new(n_r, m_l));
        let l = s.length_scale();
        // radii on 0.1 l .. 5 l, skipping those that fall on a radial node
        let mut samples = 0;
        let mut state_worst: f64 = 0.0;
        for i in 1..=50 {
            match hamiltonian_residual(&s, &[0.1 * i as f64 * l], None) {
                Ok(v) => {
                    samples += 1;
                    state_worst = state_worst.max(v);
                }
                Err(Error::SingularSample { .. }) => {}
                Err(e) => return Err(e.into()),
            }
        }
        worst = worst.max(state_worst);
        rows.push(json!({ "n_r": n_r, "m_l": m_l, "samples": samples, "max_residual": state_worst }));
    }
    Ok(SuiteResult::new("residual", worst, cfg.tolerance("residual"), json!({ "states": rows })))
}

fn normalization(cfg: &RunConfig) -> Result<SuiteResult, CliError> {
    let mut norm: f64 = 0.0;
    let mut overlap: f64 = 0.0;
    for m in -NORMALIZATION_MAX..=NORMALIZATION_MAX {
        let states: Vec<Eigenstate<f64>> = (0..=NORMALIZATION_MAX as u64)
            .map(|n| Eigenstate::new(cfg.effective, QuantumNumbers::new(n, m)))
            .collect();
        for (i, a) in states.iter().enumerate() {
            norm = norm.max((normalization_check(a)? - 1.0).abs());
            for b in &states[i + 1..] {
                overlap = overlap.max(orthogonality_check(a, b)?.abs());
            }
        }
    }
    let details = json!({ "n_r_max": NORMALIZATION_MAX, "abs_m_l_max": NORMALIZATION_MAX, "norm_deviation": norm, "max_overlap": overlap });
    Ok(SuiteResult::new("normalization", norm.max(overlap), cfg.tolerance("normalization"), details))
}

/// Runs the requested suites; the report is returned even when some fail.
pub fn run(cfg: &RunConfig, suite: Suite) -> Result<(Value, bool), CliError> {
    let selected: Vec<SuiteFn> = match suite {
        Suite::Commutators => vec![commutators],
        Suite::Fd => vec![fd],
        Suite::Residual => vec![residual],
        Suite::Normalization => vec![normalization],
        Suite::All => vec![commutators, fd, residual, normalization],
    };
    let results = selected.into_iter().map(|f| f(cfg)).collect::<Result<Vec<_>, _>>()?;
    let passed = results.iter().all(|r| r.passed);
    let p = &cfg.params;
    let report = json!({
        "passed": passed,
        "case": cfg.case.to_string(),
        "params": {
            "units": cfg.units.to_string(),
            "B": p.field(),
            "theta": p.theta(),
            "mass": p.mass(),
            "omega": p.omega(),
            "hbar": p.hbar(),
        },
        "suites": results.iter().map(SuiteResult::to_json).collect::<Vec<_>>(),
    });
    Ok((report, passed))
}
