//! `ncosc`: spectra, degeneracy tables, density rasters and oracle checks
//! for a charged oscillator on the noncommutative plane.

mod commands;
mod config;
mod error;
mod output;
mod verify;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use commands::{DegeneracyArgs, DensityArgs, SpectrumArgs};
use config::{OutputFormat, RawConfig, RunConfig, Units};
use error::{exit, CliError};

#[derive(Debug, Parser)]
#[command(name = "ncosc", version, about)]
struct Cli {
    #[command(flatten)]
    global: GlobalArgs,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct GlobalArgs {
    /// Flat `key = value` file; flags override its entries.
    #[arg(long, global = true, value_name = "PATH")]
    config: Option<PathBuf>,
    #[arg(long, global = true, value_enum, conflicts_with = "dimensionless")]
    units: Option<Units>,
    /// Shorthand for `--units dimensionless` (hbar = m = omega = 1).
    #[arg(long, global = true)]
    dimensionless: bool,
    /// Magnetic field (times the unit charge), kg/s; reduced `b` when dimensionless.
    #[arg(long = "B", global = true, value_name = "B", allow_hyphen_values = true)]
    field: Option<String>,
    /// Noncommutativity, m^2; reduced `t` when dimensionless.
    #[arg(long, global = true, allow_hyphen_values = true)]
    theta: Option<String>,
    #[arg(long, global = true)]
    mass: Option<String>,
    #[arg(long, global = true)]
    omega: Option<String>,
    #[arg(long, global = true)]
    hbar: Option<String>,
    /// Output file; standard output when absent.
    #[arg(long, global = true, value_name = "PATH")]
    out: Option<PathBuf>,
    #[arg(long, global = true, value_enum)]
    format: Option<OutputFormat>,
}

impl GlobalArgs {
    fn raw(&self) -> RawConfig {
        RawConfig {
            units: if self.dimensionless { Some(Units::Dimensionless) } else { self.units },
            field: self.field.clone(),
            theta: self.theta.clone(),
            mass: self.mass.clone(),
            omega: self.omega.clone(),
            hbar: self.hbar.clone(),
            format: self.format,
            out: self.out.clone(),
            ..Default::default()
        }
    }
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Regime, effective parameters and gamma/Omega.
    Classify,
    /// Energies over a box of quantum numbers.
    Spectrum {
        #[arg(long, default_value_t = 3)]
        n_r_max: u64,
        #[arg(long, default_value_t = -5, allow_hyphen_values = true)]
        m_l_min: i64,
        #[arg(long, default_value_t = 5, allow_hyphen_values = true)]
        m_l_max: i64,
    },
    /// Degenerate noncommutativity values and grouped levels.
    Degeneracy {
        #[arg(long)]
        n: Option<u64>,
        #[arg(long)]
        k: Option<u64>,
        /// Enumerate generators up to N_MAX (and K_MAX in the field-free case).
        #[arg(long, num_args = 1..=2, value_names = ["N_MAX", "K_MAX"])]
        scan: Option<Vec<u64>>,
        #[arg(long, default_value_t = 3)]
        n_r_max: u64,
        #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
        m_l_min: i64,
        #[arg(long, default_value_t = 11, allow_hyphen_values = true)]
        m_l_max: i64,
    },
    /// |Psi|^2 on a square grid, as 16-bit PGM or CSV.
    Density {
        #[arg(long, default_value_t = 0)]
        n_r: u64,
        #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
        m_l: i64,
        /// Half-width of the grid in length units; five RMS radii by default.
        #[arg(long)]
        radius: Option<f64>,
        #[arg(long, default_value_t = 256)]
        resolution: usize,
        /// Zero pixels outside the inscribed disc.
        #[arg(long)]
        mask: bool,
    },
    /// Run oracle suites and write a JSON report.
    Verify {
        #[arg(long, value_enum, default_value = "all")]
        suite: verify::Suite,
    },
}

fn configure_threads() -> Result<(), CliError> {
    if let Ok(text) = std::env::var("NC_OSC_THREADS") {
        let n: usize = text
            .trim()
            .parse()
            .ok()
            .filter(|n| *n > 0)
            .ok_or_else(|| CliError::Config(format!("NC_OSC_THREADS must be a positive integer, got {text:?}")))?;
        rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()
            .map_err(|e| CliError::Config(e.to_string()))?;
    }
    Ok(())
}

fn run(cli: Cli) -> Result<(), CliError> {
    configure_threads()?;
    let file = match &cli.global.config {
        Some(path) => RawConfig::from_file(path)?,
        None => RawConfig::default(),
    };
    let cfg = RunConfig::resolve(file.overlay(cli.global.raw()))?;
    let out = cfg.out.clone();
    let bytes = match cli.command {
        Command::Classify => commands::classify(&cfg, cfg.format)?,
        Command::Spectrum { n_r_max, m_l_min, m_l_max } => {
            commands::spectrum(&cfg, &SpectrumArgs { n_r_max, m_l_min, m_l_max }, cfg.format)?
        }
        Command::Degeneracy { n, k, scan, n_r_max, m_l_min, m_l_max } => {
            let args = DegeneracyArgs { n, k, scan, n_r_max, m_l_min, m_l_max };
            commands::degeneracy(&cfg, &args, cfg.format)?
        }
        Command::Density { n_r, m_l, radius, resolution, mask } => {
            let format = cfg.format.unwrap_or(if out.is_some() { OutputFormat::Pgm } else { OutputFormat::Csv });
            commands::density(&cfg, &DensityArgs { n_r, m_l, radius, resolution, mask }, format)?
        }
        Command::Verify { suite } => {
            let (report, passed) = verify::run(&cfg, suite)?;
            output::emit(out.as_deref(), output::json_text(&report).as_bytes())?;
            if !passed {
                return Err(CliError::VerificationFailed("one or more suites exceeded tolerance".into()));
            }
            return Ok(());
        }
    };
    output::emit(out.as_deref(), &bytes)?;
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::from(exit::OK as u8),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
