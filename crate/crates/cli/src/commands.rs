//! Subcommand bodies. Each returns the bytes to emit; every number comes
//! straight from a library call.

use ncosc::degeneracy::{
    group_levels_with_cap, ratio_exact, scan_case_one, scan_case_three, theta_d_case3, ExactRatio,
};
use ncosc::wavefunctions::{density_grid_with, DensityOptions};
use ncosc::{
    density_spread_metric, energy, energy_coefficient, energy_coefficient_exact, g_candidates, kappa_from_spec,
    theta_d_case1, CaseIDegeneracySpec, CaseLabel, Eigenstate, EnergyLevel, Error, QuantumNumbers, Rational,
};

use crate::config::{OutputFormat, RunConfig};
use crate::error::CliError;
use crate::output::{density_csv, density_pgm, float, json_text, Cell, Table};

pub const SATURATED_MESSAGE: &str = "every level infinitely degenerate; θ_d = θ";

fn render(table: &Table, format: OutputFormat) -> Result<Vec<u8>, CliError> {
    match format {
        OutputFormat::Csv => Ok(table.to_csv().into_bytes()),
        OutputFormat::Json => Ok(json_text(&table.to_json()).into_bytes()),
        OutputFormat::Pgm => Err(CliError::Config("PGM output is only available for density".into())),
    }
}

fn ratio_name(case: CaseLabel) -> &'static str {
    match case {
        CaseLabel::NoField => "kappa",
        CaseLabel::Saturated | CaseLabel::Intermediate => "xi",
    }
}

/// `gamma/Omega` exactly when the inputs allow it.
pub fn exact_ratio(cfg: &RunConfig) -> Result<ExactRatio, CliError> {
    Ok(ratio_exact(&cfg.b, &cfg.t)?)
}

fn with_params(table: Table, cfg: &RunConfig) -> Table {
    let p = &cfg.params;
    table
        .meta("units", cfg.units.to_string())
        .meta("B", p.field())
        .meta("theta", p.theta())
        .meta("mass", p.mass())
        .meta("omega", p.omega())
        .meta("hbar", p.hbar())
        .meta("case", cfg.case.to_string())
}

pub fn classify(cfg: &RunConfig, format: Option<OutputFormat>) -> Result<Vec<u8>, CliError> {
    let e = &cfg.effective;
    // at saturation the ratio is 1 whatever the rounding of SI inputs
    let exact = match (cfg.case, exact_ratio(cfg)?) {
        (CaseLabel::Saturated, _) => Some(Rational::one()),
        (_, ExactRatio::Rational(r)) => Some(r),
        (_, ExactRatio::NotRational(_)) => None,
    };
    let table = with_params(Table::new(&[]), cfg)
        .meta("mass_eff", e.mass_eff())
        .meta("omega_eff", e.omega_eff())
        .meta("gamma", e.gamma())
        .meta(ratio_name(cfg.case), e.ratio())
        .meta(
            &format!("{}_exact", ratio_name(cfg.case)),
            exact.map(Cell::from).unwrap_or_else(|| Cell::from("irrational")),
        )
        .meta("length_scale", e.length_scale())
        .meta("energy_unit", e.energy_unit());
    match format.unwrap_or(OutputFormat::Csv) {
        OutputFormat::Json => render(&table, OutputFormat::Json),
        OutputFormat::Csv => Ok(table.to_text().into_bytes()),
        OutputFormat::Pgm => render(&table, OutputFormat::Pgm),
    }
}

pub struct SpectrumArgs {
    pub n_r_max: u64,
    pub m_l_min: i64,
    pub m_l_max: i64,
}

pub fn spectrum(cfg: &RunConfig, args: &SpectrumArgs, format: Option<OutputFormat>) -> Result<Vec<u8>, CliError> {
    let width = if args.m_l_min > args.m_l_max { 0 } else { (args.m_l_max - args.m_l_min + 1) as u128 };
    let count = width * (args.n_r_max as u128 + 1);
    let cap = cfg.cap("states");
    if count > cap as u128 {
        return Err(Error::BudgetExceeded { what: "spectrum states", requested: count, cap: cap as u128 }.into());
    }
    let exact = match (cfg.case, exact_ratio(cfg)?) {
        (CaseLabel::Saturated, _) => Some(Rational::one()),
        (_, r) => r.as_rational().cloned(),
    };
    let e = &cfg.effective;
    let mut table = with_params(Table::new(&["n_r", "m_l", "coefficient", "energy"]), cfg);
    if width > 0 {
        for n_r in 0..=args.n_r_max {
            for m_l in args.m_l_min..=args.m_l_max {
                let q = QuantumNumbers::new(n_r, m_l);
                let coefficient = match &exact {
                    Some(r) => Cell::from(energy_coefficient_exact(r, q)),
                    None => Cell::from(energy_coefficient(e.ratio(), q)),
                };
                table.push(vec![n_r.into(), m_l.into(), coefficient, energy(e, q).into()]);
            }
        }
    }
    render(&table, format.unwrap_or(OutputFormat::Csv))
}

pub struct DegeneracyArgs {
    pub n: Option<u64>,
    pub k: Option<u64>,
    pub scan: Option<Vec<u64>>,
    pub n_r_max: u64,
    pub m_l_min: i64,
    pub m_l_max: i64,
}

fn states_text(level: &EnergyLevel) -> String {
    level.states.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ")
}

fn levels_table(cfg: &RunConfig, ratio: &Rational, args: &DegeneracyArgs, table: Table) -> Result<Table, CliError> {
    let levels = group_levels_with_cap(ratio, args.n_r_max, args.m_l_min, args.m_l_max, cfg.cap("states"))?;
    let mut table = table
        .meta("n_r_max", args.n_r_max)
        .meta("m_l_min", args.m_l_min)
        .meta("m_l_max", args.m_l_max);
    table.columns = vec!["coefficient", "degeneracy", "states"];
    for level in &levels {
        table.push(vec![level.coefficient.clone().into(), level.degeneracy().into(), states_text(level).into()]);
    }
    Ok(table)
}

fn natural_scales(cfg: &RunConfig) -> (f64, f64, f64) {
    (cfg.params.mass(), cfg.params.omega(), cfg.params.hbar())
}

pub fn degeneracy(cfg: &RunConfig, args: &DegeneracyArgs, format: Option<OutputFormat>) -> Result<Vec<u8>, CliError> {
    let format = format.unwrap_or(OutputFormat::Csv);
    let (mass, omega, hbar) = natural_scales(cfg);
    let base = with_params(Table::new(&[]), cfg);
    let table = match cfg.case {
        CaseLabel::Saturated => {
            let t = base.meta("message", SATURATED_MESSAGE).meta("theta_d", cfg.params.theta());
            return match format {
                OutputFormat::Csv => Ok(format!("{SATURATED_MESSAGE}\n{}", t.to_text()).into_bytes()),
                other => render(&t, other),
            };
        }
        CaseLabel::NoField => match (&args.scan, args.n, args.k) {
            (Some(scan), _, _) => {
                let (n_max, k_max) = scan_bounds(scan)?;
                let specs = scan_case_one(n_max, k_max);
                if specs.is_empty() {
                    return Err(Error::EmptyResult("scan range holds no generators".into()).into());
                }
                let mut t = base;
                t.columns = vec!["n", "k", "kappa", "c_squared", "theta_d"];
                for s in &specs {
                    t.push(vec![
                        s.n().into(),
                        s.k().into(),
                        kappa_from_spec(s).into(),
                        s.c_squared().into(),
                        theta_d_case1(mass, omega, hbar, s).into(),
                    ]);
                }
                t
            }
            (None, Some(n), Some(k)) => {
                let s = CaseIDegeneracySpec::new(n, k)?;
                let kappa = kappa_from_spec(&s);
                let t = base
                    .meta("n", n)
                    .meta("k", k)
                    .meta("kappa", kappa.clone())
                    .meta("theta_d", theta_d_case1(mass, omega, hbar, &s));
                levels_table(cfg, &kappa, args, t)?
            }
            (None, None, None) => from_current_ratio(cfg, args, base)?,
            _ => return Err(CliError::Config("--n and --k must be given together".into())),
        },
        CaseLabel::Intermediate => match (&args.scan, args.n, args.k) {
            (Some(scan), _, _) => {
                let (n_max, _) = scan_bounds(scan)?;
                let specs = scan_case_three(&cfg.b, n_max);
                if specs.is_empty() {
                    return Err(Error::EmptyResult(format!("no admissible g for f = {} with n <= {n_max}", cfg.b)).into());
                }
                let mut t = base.meta("f", cfg.b.clone());
                t.columns = vec!["n", "k", "branch", "g", "xi", "theta_d"];
                for s in &specs {
                    t.push(vec![
                        s.n().into(),
                        s.k().into(),
                        s.branch().to_string().into(),
                        s.g().clone().into(),
                        s.xi().into(),
                        theta_d_case3(mass, omega, hbar, s.g()).into(),
                    ]);
                }
                t
            }
            (None, Some(n), Some(k)) => {
                let candidates = g_candidates(&cfg.b, n, k)?;
                let mut t = base.meta("f", cfg.b.clone()).meta("n", n).meta("k", k);
                t.columns = vec!["branch", "g", "xi", "theta_d"];
                for c in &candidates {
                    t.push(vec![
                        c.branch.to_string().into(),
                        c.g.clone().into(),
                        c.xi.clone().into(),
                        theta_d_case3(mass, omega, hbar, &c.g).into(),
                    ]);
                }
                t
            }
            (None, None, None) => from_current_ratio(cfg, args, base)?,
            _ => return Err(CliError::Config("--n and --k must be given together".into())),
        },
    };
    render(&table, format)
}

fn scan_bounds(scan: &[u64]) -> Result<(u64, u64), CliError> {
    match scan {
        [n] => Ok((*n, *n)),
        [n, k] => Ok((*n, *k)),
        _ => Err(CliError::Config("--scan takes N_MAX and optionally K_MAX".into())),
    }
}

fn from_current_ratio(cfg: &RunConfig, args: &DegeneracyArgs, base: Table) -> Result<Table, CliError> {
    match exact_ratio(cfg)? {
        ExactRatio::Rational(r) => levels_table(cfg, &r, args, base.meta(ratio_name(cfg.case), r.clone())),
        ExactRatio::NotRational(v) => Err(Error::EmptyResult(format!(
            "{} = {} is irrational; no accidental degeneracy at these parameters",
            ratio_name(cfg.case),
            float(v)
        ))
        .into()),
    }
}

pub struct DensityArgs {
    pub n_r: u64,
    pub m_l: i64,
    pub radius: Option<f64>,
    pub resolution: usize,
    pub mask: bool,
}

pub fn density(cfg: &RunConfig, args: &DensityArgs, format: OutputFormat) -> Result<Vec<u8>, CliError> {
    let state = Eigenstate::new(cfg.effective, QuantumNumbers::new(args.n_r, args.m_l));
    let radius = args.radius.unwrap_or_else(|| 5.0 * density_spread_metric(&state));
    let cap = usize::try_from(cfg.cap("resolution")).unwrap_or(usize::MAX);
    let options = DensityOptions { mask_outside_disc: args.mask, resolution_cap: cap };
    let grid = density_grid_with(&state, radius, args.resolution, options)?;
    let m = &grid.metadata;
    let comments = vec![
        format!("ncosc density {}", cfg.echo()),
        format!(
            "n_r={} m_l={} mass_eff={} omega_eff={} gamma={} length_scale={}",
            m.q.n_r,
            m.q.m_l,
            float(m.mass_eff),
            float(m.omega_eff),
            float(m.gamma),
            float(m.length_scale)
        ),
        format!(
            "radius={} resolution={} masked={} max={}",
            float(grid.radius),
            grid.resolution,
            m.masked,
            float(grid.max_value())
        ),
    ];
    match format {
        OutputFormat::Pgm => Ok(density_pgm(&grid, &comments)),
        OutputFormat::Csv => Ok(density_csv(&grid, &comments).into_bytes()),
        OutputFormat::Json => Err(CliError::Config("density supports pgm and csv output".into())),
    }
}
