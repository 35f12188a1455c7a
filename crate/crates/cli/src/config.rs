//! Run configuration: a flat `key = value` file overlaid by command-line
//! flags, resolved into validated physical parameters.

use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};

use clap::ValueEnum;
use ncosc::degeneracy::DEFAULT_STATE_CAP;
use ncosc::params::{DEFAULT_CASE_TOLERANCE, HBAR_SI};
use ncosc::wavefunctions::DEFAULT_RESOLUTION_CAP;
use ncosc::{
    classify_case, classify_case_exact, effective_params, CaseLabel, EffectiveParams, PhysicalParams, Rational,
    UnitsMode,
};

use crate::error::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Csv,
    Json,
    Pgm,
}

impl OutputFormat {
    fn parse(s: &str) -> Result<Self, CliError> {
        <Self as ValueEnum>::from_str(s, true).map_err(|_| CliError::Config(format!("unknown format {s:?}")))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Units {
    Si,
    Dimensionless,
}

impl From<Units> for UnitsMode {
    fn from(u: Units) -> Self {
        match u {
            Units::Si => UnitsMode::Si,
            Units::Dimensionless => UnitsMode::Dimensionless,
        }
    }
}

pub const TOLERANCE_DEFAULTS: [(&str, f64); 5] = [
    ("case", DEFAULT_CASE_TOLERANCE),
    ("commutators", 1e-10),
    ("fd", 1e-6),
    ("normalization", 1e-8),
    ("residual", 1e-6),
];

pub const CAP_DEFAULTS: [(&str, u64); 2] = [("resolution", DEFAULT_RESOLUTION_CAP as u64), ("states", DEFAULT_STATE_CAP)];

/// Unresolved settings, as read from a config file or flags. Numbers stay
/// as text so they can be parsed exactly.
#[derive(Debug, Clone, Default)]
pub struct RawConfig {
    pub units: Option<Units>,
    pub field: Option<String>,
    pub theta: Option<String>,
    pub mass: Option<String>,
    pub omega: Option<String>,
    pub hbar: Option<String>,
    pub format: Option<OutputFormat>,
    pub out: Option<PathBuf>,
    pub tolerances: BTreeMap<String, f64>,
    pub caps: BTreeMap<String, u64>,
}

impl RawConfig {
    pub fn from_file(path: &Path) -> Result<Self, CliError> {
        let text = fs::read_to_string(path).map_err(|e| CliError::Config(format!("{}: {e}", path.display())))?;
        Self::parse(&text)
    }

    pub fn parse(text: &str) -> Result<Self, CliError> {
        let mut c = Self::default();
        for (lineno, line) in text.lines().enumerate() {
            // '#' starts a comment anywhere on the line
            let line = line.split_once('#').map_or(line, |(before, _)| before).trim();
            if line.is_empty() {
                continue;
            }
            let (key, value) = line
                .split_once('=')
                .ok_or_else(|| CliError::Config(format!("line {}: expected key = value", lineno + 1)))?;
            c.set(key.trim(), value.trim())
                .map_err(|e| CliError::Config(format!("line {}: {e}", lineno + 1)))?;
        }
        Ok(c)
    }

    fn set(&mut self, key: &str, value: &str) -> Result<(), String> {
        let text = || Some(value.to_string());
        match key {
            "units" => {
                self.units = Some(Units::from_str(value, true).map_err(|_| format!("unknown units {value:?}"))?)
            }
            "B" => self.field = text(),
            "theta" => self.theta = text(),
            "mass" => self.mass = text(),
            "omega" => self.omega = text(),
            "hbar" => self.hbar = text(),
            "format" => self.format = Some(OutputFormat::parse(value).map_err(|e| e.to_string())?),
            "out" => self.out = Some(PathBuf::from(value)),
            _ => {
                if let Some(name) = key.strip_prefix("tol.") {
                    if !TOLERANCE_DEFAULTS.iter().any(|(k, _)| *k == name) {
                        return Err(format!("unknown tolerance {name:?}"));
                    }
                    let v: f64 = value.parse().map_err(|_| format!("bad tolerance {value:?}"))?;
                    if !(v.is_finite() && v > 0.0) {
                        return Err(format!("tolerance {name} must be positive, got {value}"));
                    }
                    self.tolerances.insert(name.to_string(), v);
                } else if let Some(name) = key.strip_prefix("cap.") {
                    if !CAP_DEFAULTS.iter().any(|(k, _)| *k == name) {
                        return Err(format!("unknown cap {name:?}"));
                    }
                    let v: u64 = value.parse().map_err(|_| format!("bad cap {value:?}"))?;
                    self.caps.insert(name.to_string(), v);
                } else {
                    return Err(format!("unknown key {key:?}"));
                }
            }
        }
        Ok(())
    }

    /// Fields set in `flags` replace those in `self`.
    pub fn overlay(mut self, flags: RawConfig) -> Self {
        macro_rules! take {
            ($($f:ident),*) => { $( if flags.$f.is_some() { self.$f = flags.$f; } )* };
        }
        take!(units, field, theta, mass, omega, hbar, format, out);
        self.tolerances.extend(flags.tolerances);
        self.caps.extend(flags.caps);
        self
    }
}

/// Validated configuration with the parameter set in both float and exact
/// reduced form.
#[derive(Debug, Clone)]
pub struct RunConfig {
    pub units: UnitsMode,
    pub params: PhysicalParams<f64>,
    pub effective: EffectiveParams<f64>,
    pub case: CaseLabel,
    /// Exact reduced field `b = B/(m omega)` and noncommutativity
    /// `t = theta m omega / hbar`.
    pub b: Rational,
    pub t: Rational,
    pub format: Option<OutputFormat>,
    pub out: Option<PathBuf>,
    pub tolerances: BTreeMap<String, f64>,
    pub caps: BTreeMap<String, u64>,
}

fn number(name: &str, text: &str) -> Result<Rational, CliError> {
    text.parse().map_err(|_| CliError::Config(format!("{name}: cannot parse {text:?} as a number")))
}

impl RunConfig {
    pub fn resolve(raw: RawConfig) -> Result<Self, CliError> {
        let units: UnitsMode = raw.units.unwrap_or(Units::Dimensionless).into();
        let field = number("B", raw.field.as_deref().unwrap_or("0"))?;
        let theta = number("theta", raw.theta.as_deref().ok_or_else(|| CliError::Config("theta is required".into()))?)?;
        let (mass, omega, hbar) = match units {
            UnitsMode::Dimensionless => {
                for (name, v) in [("mass", &raw.mass), ("omega", &raw.omega), ("hbar", &raw.hbar)] {
                    if let Some(v) = v {
                        if number(name, v)? != 1 {
                            return Err(CliError::Config(format!("{name} is fixed to 1 in dimensionless units")));
                        }
                    }
                }
                (Rational::one(), Rational::one(), Rational::one())
            }
            UnitsMode::Si => {
                let need = |name: &str, v: &Option<String>| {
                    v.as_deref()
                        .ok_or_else(|| CliError::Config(format!("{name} is required in SI units")))
                        .and_then(|s| number(name, s))
                };
                let hbar = match &raw.hbar {
                    Some(s) => number("hbar", s)?,
                    None => number("hbar", &format!("{HBAR_SI:e}"))?,
                };
                (need("mass", &raw.mass)?, need("omega", &raw.omega)?, hbar)
            }
        };
        let params = PhysicalParams::new(
            units,
            mass.to_f64(),
            omega.to_f64(),
            field.to_f64(),
            theta.to_f64(),
            hbar.to_f64(),
        )?;
        let natural = &mass * &omega;
        if !natural.is_positive() || !hbar.is_positive() {
            return Err(ncosc::Error::Domain("mass, omega and hbar must be positive".into()).into());
        }
        let b = &field / &natural;
        let t = &theta * &natural / &hbar;

        let mut tolerances: BTreeMap<String, f64> =
            TOLERANCE_DEFAULTS.iter().map(|(k, v)| (k.to_string(), *v)).collect();
        tolerances.extend(raw.tolerances);
        let mut caps: BTreeMap<String, u64> = CAP_DEFAULTS.iter().map(|(k, v)| (k.to_string(), *v)).collect();
        caps.extend(raw.caps);

        // exact inputs decide the regime outright; SI inputs rarely hit
        // B theta = hbar exactly, so the float tolerance applies there
        let case = match units {
            UnitsMode::Dimensionless => classify_case_exact(&b, &t)?,
            UnitsMode::Si => classify_case(&params, tolerances["case"])?,
        };
        let effective = effective_params(&params)?;
        Ok(Self { units, params, effective, case, b, t, format: raw.format, out: raw.out, tolerances, caps })
    }

    pub fn tolerance(&self, name: &str) -> f64 {
        self.tolerances[name]
    }

    pub fn cap(&self, name: &str) -> u64 {
        self.caps[name]
    }

    /// One-line parameter echo used in file headers.
    pub fn echo(&self) -> String {
        let p = &self.params;
        format!(
            "units={} B={} theta={} mass={} omega={} hbar={} case={}",
            self.units,
            crate::output::float(p.field()),
            crate::output::float(p.theta()),
            crate::output::float(p.mass()),
            crate::output::float(p.omega()),
            crate::output::float(p.hbar()),
            self.case
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_flat_files() {
        let c = RawConfig::parse("# comment\nunits = si\nB=0\ntheta = 5.395e-21\nmass=9.109e-31\nomega=1.518e16\ntol.fd = 1e-7   # tighter\ncap.states = 100\n")
            .unwrap();
        assert_eq!(c.units, Some(Units::Si));
        assert_eq!(c.theta.as_deref(), Some("5.395e-21"));
        assert_eq!(c.tolerances["fd"], 1e-7);
        assert_eq!(c.caps["states"], 100);
    }

    #[test]
    fn rejects_unknown_and_malformed_keys() {
        for bad in ["colour = red", "tol.speed = 1", "cap.memory = 3", "tol.fd = -1", "just text", "units = cgs"] {
            assert!(RawConfig::parse(bad).is_err(), "{bad}");
        }
    }

    #[test]
    fn flags_win_over_file() {
        let file = RawConfig::parse("theta = 1\nB = 0.5\ntol.fd = 1e-3").unwrap();
        let flags = RawConfig { field: Some("0.25".into()), ..Default::default() };
        let c = file.overlay(flags);
        assert_eq!(c.field.as_deref(), Some("0.25"));
        assert_eq!(c.theta.as_deref(), Some("1"));
        assert_eq!(c.tolerances["fd"], 1e-3);
    }

    #[test]
    fn resolves_exact_reduced_parameters() {
        let raw = RawConfig { field: Some("1".into()), theta: Some("1".into()), ..Default::default() };
        let c = RunConfig::resolve(raw).unwrap();
        assert_eq!(c.case, CaseLabel::Saturated);
        assert_eq!(c.b, 1);

        let raw = RawConfig {
            units: Some(Units::Si),
            field: Some("0".into()),
            theta: Some("5.395e-21".into()),
            mass: Some("9.109e-31".into()),
            omega: Some("1.518e16".into()),
            ..Default::default()
        };
        let c = RunConfig::resolve(raw).unwrap();
        assert_eq!(c.case, CaseLabel::NoField);
        assert!((c.t.to_f64() - c.params.reduced_theta()).abs() < 1e-12);
    }

    #[test]
    fn resolution_errors() {
        let raw = RawConfig { field: Some("1".into()), theta: Some("1.5".into()), ..Default::default() };
        assert!(matches!(RunConfig::resolve(raw), Err(CliError::Core(ncosc::Error::ConstraintViolation { .. }))));
        assert!(RunConfig::resolve(RawConfig::default()).is_err());
        let raw = RawConfig { theta: Some("1".into()), mass: Some("2".into()), ..Default::default() };
        assert!(RunConfig::resolve(raw).is_err());
        let raw = RawConfig { units: Some(Units::Si), theta: Some("1".into()), ..Default::default() };
        assert!(RunConfig::resolve(raw).is_err());
    }
}
