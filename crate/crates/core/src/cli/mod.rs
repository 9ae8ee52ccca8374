//! The `bathlab` command-line tool.
//!
//! All inputs and outputs are in reduced units γ = M = ħ = k_B = 1: `--omega-d`
//! is ω_D/γ, temperatures are k_BT/ħγ. Tables go to standard output (or
//! `--out`) as CSV with nine significant digits, or as JSON with `--format json`.
//!
//! Exit codes: 0 success, 1 numerical failure, 2 invalid arguments.

mod output;

use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::bath::SpectralDensity;
use crate::modeshift::{DampedSystemFrequencies, DensityShift};
use crate::oracle::{
    coupled_spectrum, discrete_specific_heat, interlacing_holds, secular_relative_residuals, DiscreteBath,
};
use crate::thermo::{
    internal_energy, low_t_asymptote, specific_heat_closed, specific_heat_quadrature, zero_point_energy,
};
use crate::Error;

pub use output::{format_number, Cell, Table};

#[derive(Debug, Parser)]
#[command(name = "bathlab", version, about = "Eigenmode density shift and thermodynamics of a damped free particle")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Output format (CSV for tables, JSON for single records by default)
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,

    /// Write output to this file instead of standard output
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Change of the eigenmode density ρ_S+B − ρ_B on an equidistant grid
    DensityShift(DensityShiftArgs),
    /// Specific heat C(T)
    Heat(HeatArgs),
    /// Internal energy U(T), or the zero-point value U₀
    Energy(EnergyArgs),
    /// Negative-specific-heat criterion of the bath
    Anomaly(AnomalyArgs),
    /// Finite-bath validation against the continuum specific heat
    Oracle(OracleArgs),
}

#[derive(Debug, Args)]
#[command(allow_negative_numbers = true)]
pub struct DensityShiftArgs {
    /// Drude cutoff ω_D/γ
    #[arg(long)]
    pub omega_d: f64,
    /// Largest frequency ω/γ of the grid
    #[arg(long, default_value_t = 10.0)]
    pub omega_max: f64,
    /// Number of grid points, including ω = 0
    #[arg(long, default_value_t = 500)]
    pub points: usize,
    /// Also emit the three Lorentzian components
    #[arg(long)]
    pub decompose: bool,
}

#[derive(Debug, Args)]
pub struct TemperatureGrid {
    /// Drude cutoff ω_D/γ
    #[arg(long)]
    pub omega_d: f64,
    #[arg(long, default_value_t = 0.01)]
    pub t_min: f64,
    #[arg(long, default_value_t = 10.0)]
    pub t_max: f64,
    #[arg(long, default_value_t = 50)]
    pub points: usize,
    /// Log-spaced temperatures
    #[arg(long)]
    pub log: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum HeatMethod {
    /// Trigamma closed form
    Closed,
    /// Quadrature of the density shift against the oscillator specific heat
    Quadrature,
    /// Linear low-temperature law
    Asymptotic,
}

#[derive(Debug, Args)]
#[command(allow_negative_numbers = true)]
pub struct HeatArgs {
    #[command(flatten)]
    pub grid: TemperatureGrid,
    #[arg(long, value_enum, default_value_t = HeatMethod::Closed)]
    pub method: HeatMethod,
}

#[derive(Debug, Args)]
#[command(allow_negative_numbers = true)]
pub struct EnergyArgs {
    #[command(flatten)]
    pub grid: TemperatureGrid,
    /// Print only the zero-temperature energy
    #[arg(long)]
    pub zero_point: bool,
}

#[derive(Debug, Args)]
#[command(allow_negative_numbers = true)]
pub struct AnomalyArgs {
    /// Drude cutoff ω_D/γ
    #[arg(long)]
    pub omega_d: f64,
}

#[derive(Debug, Args)]
#[command(allow_negative_numbers = true)]
pub struct OracleArgs {
    /// Drude cutoff ω_D/γ
    #[arg(long, default_value_t = 1.0)]
    pub omega_d: f64,
    /// Bath frequency spacing Δ/γ
    #[arg(long, default_value_t = 0.02)]
    pub delta: f64,
    /// Number of bath oscillators
    #[arg(long, default_value_t = 5000)]
    pub n_modes: usize,
    /// Comma-separated temperatures
    #[arg(long, value_delimiter = ',', default_value = "0.5,1,2")]
    pub temps: Vec<f64>,
    /// Discretise a strictly Ohmic bath instead of a Drude bath
    #[arg(long)]
    pub strict_ohmic: bool,
    /// Emit the bath and coupled eigenfrequencies instead of specific heats
    #[arg(long)]
    pub spectrum: bool,
}

/// What a command produced.
#[derive(Debug, Clone, PartialEq)]
pub struct Report {
    pub stdout: String,
    /// Run metadata for standard error; kept off standard output so tables stay
    /// byte-identical between runs.
    pub summary: Option<Value>,
    pub failed: bool,
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Numeric(#[from] Error),
    #[error("cannot write output: {0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Numeric(_) | CliError::Io(_) => 1,
        }
    }
}

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

fn check_cutoff(omega_d: f64) -> Result<(), CliError> {
    if omega_d > 0.0 && omega_d.is_finite() {
        Ok(())
    } else {
        Err(usage(format!("--omega-d must be positive, got {omega_d}")))
    }
}

impl TemperatureGrid {
    fn validate(&self) -> Result<(), CliError> {
        check_cutoff(self.omega_d)?;
        if !(self.t_min > 0.0 && self.t_max.is_finite()) {
            return Err(usage(format!("temperatures must be positive, got --t-min {}", self.t_min)));
        }
        if !(self.t_min < self.t_max) {
            return Err(usage(format!(
                "--t-min must be below --t-max, got {} and {}",
                self.t_min, self.t_max
            )));
        }
        if self.points < 2 {
            return Err(usage(format!("--points must be at least 2, got {}", self.points)));
        }
        Ok(())
    }

    pub fn temperatures(&self) -> Vec<f64> {
        let last = (self.points - 1) as f64;
        (0..self.points)
            .map(|i| {
                let f = i as f64 / last;
                if self.log {
                    (self.t_min.ln() + f * (self.t_max.ln() - self.t_min.ln())).exp()
                } else {
                    self.t_min + f * (self.t_max - self.t_min)
                }
            })
            .collect()
    }
}

fn render_table(table: &Table, format: Option<Format>) -> String {
    match format.unwrap_or(Format::Csv) {
        Format::Csv => table.to_csv(),
        Format::Json => json_line(&table.to_json()),
    }
}

fn render_record(table: &Table, format: Option<Format>) -> String {
    match format.unwrap_or(Format::Json) {
        Format::Csv => table.to_csv(),
        Format::Json => json_line(&table.record_json()),
    }
}

fn json_line(v: &Value) -> String {
    let mut s = v.to_string();
    s.push('\n');
    s
}

fn density_shift(args: &DensityShiftArgs, format: Option<Format>) -> Result<Report, CliError> {
    check_cutoff(args.omega_d)?;
    if !(args.omega_max > 0.0 && args.omega_max.is_finite()) {
        return Err(usage(format!("--omega-max must be positive, got {}", args.omega_max)));
    }
    if args.points < 2 {
        return Err(usage(format!("--points must be at least 2, got {}", args.points)));
    }
    let sd = SpectralDensity::drude(1.0, args.omega_d)?;
    let shift = DensityShift::new(sd);
    let freqs = DampedSystemFrequencies::new(1.0, args.omega_d)?;
    let mut columns = vec!["omega", "delta_rho"];
    if args.decompose {
        columns.extend(["lor1", "lor2", "lor3"]);
    }
    let mut table = Table::new(columns);
    let last = (args.points - 1) as f64;
    for i in 0..args.points {
        let omega = args.omega_max * i as f64 / last;
        let mut row = vec![Cell::Number(omega), Cell::Number(shift.eval(omega)?)];
        if args.decompose {
            let (a, b, c) = freqs.lorentzian_components(omega);
            row.extend([Cell::Number(a), Cell::Number(b), Cell::Number(c)]);
        }
        table.push(row);
    }
    Ok(Report {
        stdout: render_table(&table, format),
        summary: None,
        failed: false,
    })
}

fn heat(args: &HeatArgs, format: Option<Format>) -> Result<Report, CliError> {
    args.grid.validate()?;
    let sd = SpectralDensity::drude(1.0, args.grid.omega_d)?;
    let freqs = DampedSystemFrequencies::new(1.0, args.grid.omega_d)?;
    let asymptote = match args.method {
        HeatMethod::Asymptotic => Some(low_t_asymptote(&sd)?),
        _ => None,
    };
    let mut table = Table::new(vec!["T", "C"]);
    for t in args.grid.temperatures() {
        let c = match (args.method, asymptote) {
            (HeatMethod::Closed, _) => specific_heat_closed(&freqs, t)?,
            (HeatMethod::Quadrature, _) => specific_heat_quadrature(&sd, t)?,
            (HeatMethod::Asymptotic, Some(a)) => a.specific_heat(t),
            (HeatMethod::Asymptotic, None) => unreachable!(),
        };
        table.push(vec![t.into(), c.into()]);
    }
    Ok(Report {
        stdout: render_table(&table, format),
        summary: None,
        failed: false,
    })
}

fn energy(args: &EnergyArgs, format: Option<Format>) -> Result<Report, CliError> {
    let freqs = if args.zero_point {
        check_cutoff(args.grid.omega_d)?;
        DampedSystemFrequencies::new(1.0, args.grid.omega_d)?
    } else {
        args.grid.validate()?;
        DampedSystemFrequencies::new(1.0, args.grid.omega_d)?
    };
    if args.zero_point {
        let mut table = Table::new(vec!["u0"]);
        table.push(vec![zero_point_energy(&freqs).into()]);
        return Ok(Report {
            stdout: render_record(&table, format),
            summary: None,
            failed: false,
        });
    }
    let mut table = Table::new(vec!["T", "U"]);
    for t in args.grid.temperatures() {
        table.push(vec![t.into(), internal_energy(&freqs, t)?.into()]);
    }
    Ok(Report {
        stdout: render_table(&table, format),
        summary: None,
        failed: false,
    })
}

fn anomaly(args: &AnomalyArgs, format: Option<Format>) -> Result<Report, CliError> {
    check_cutoff(args.omega_d)?;
    let sd = SpectralDensity::drude(1.0, args.omega_d)?;
    let report = sd.anomaly()?;
    let slope = low_t_asymptote(&sd)?.slope;
    let mut table = Table::new(vec![
        "gamma_hat_prime_zero",
        "missing_mass_ratio",
        "low_t_negative",
        "low_t_slope",
    ]);
    table.push(vec![
        report.gamma_hat_prime_zero.into(),
        report.missing_mass_ratio.into(),
        Cell::Flag(report.low_t_specific_heat_negative),
        slope.into(),
    ]);
    Ok(Report {
        stdout: render_record(&table, format),
        summary: None,
        failed: false,
    })
}

fn oracle(args: &OracleArgs, format: Option<Format>) -> Result<Report, CliError> {
    check_cutoff(args.omega_d)?;
    if !(args.delta > 0.0 && args.delta.is_finite()) {
        return Err(usage(format!("--delta must be positive, got {}", args.delta)));
    }
    if args.n_modes < 1 {
        return Err(usage("--n-modes must be at least 1"));
    }
    if !args.spectrum && (args.temps.is_empty() || args.temps.iter().any(|t| !(*t > 0.0 && t.is_finite()))) {
        return Err(usage("--temps must be a list of positive temperatures"));
    }
    let sd = if args.strict_ohmic {
        SpectralDensity::strict_ohmic(1.0)?
    } else {
        SpectralDensity::drude(1.0, args.omega_d)?
    };

    let start = Instant::now();
    let bath = DiscreteBath::build(&sd, args.delta, args.n_modes)?;
    let spectrum = coupled_spectrum(&bath)?;
    let interlacing_ok = interlacing_holds(&bath, &spectrum);
    let max_residual = secular_relative_residuals(&bath, &spectrum)
        .into_iter()
        .fold(0.0, f64::max);

    let table = if args.spectrum {
        let mut table = Table::new(vec!["k", "omega_bath", "omega_coupled", "mass"]);
        for (k, ((w, omega), m)) in bath
            .frequencies()
            .iter()
            .zip(&spectrum.frequencies)
            .zip(bath.masses())
            .enumerate()
        {
            table.push(vec![Cell::Integer(k as i64 + 1), (*w).into(), (*omega).into(), (*m).into()]);
        }
        table
    } else {
        let continuum = DampedSystemFrequencies::of(&sd);
        let mut table = Table::new(vec!["T", "C_discrete", "C_continuum", "rel_err"]);
        for &t in &args.temps {
            let discrete = discrete_specific_heat(&bath, &spectrum, t);
            let exact = match continuum {
                Some(f) => specific_heat_closed(&f, t)?,
                None => specific_heat_quadrature(&sd, t)?,
            };
            table.push(vec![
                t.into(),
                discrete.into(),
                exact.into(),
                ((discrete - exact) / exact).abs().into(),
            ]);
        }
        table
    };

    let summary = json!({
        "interlacing_ok": interlacing_ok,
        "max_secular_residual": max_residual,
        "runtime_seconds": start.elapsed().as_secs_f64(),
    });
    Ok(Report {
        stdout: render_table(&table, format),
        summary: Some(summary),
        failed: !interlacing_ok,
    })
}

/// Runs a parsed command line.
pub fn execute(cli: &Cli) -> Result<Report, CliError> {
    let report = match &cli.command {
        Command::DensityShift(a) => density_shift(a, cli.format),
        Command::Heat(a) => heat(a, cli.format),
        Command::Energy(a) => energy(a, cli.format),
        Command::Anomaly(a) => anomaly(a, cli.format),
        Command::Oracle(a) => oracle(a, cli.format),
    }?;
    match &cli.out {
        Some(path) => fs::write(path, &report.stdout)?,
        None => std::io::stdout().lock().write_all(report.stdout.as_bytes())?,
    }
    Ok(report)
}

pub fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => e.exit(),
    };
    match execute(&cli) {
        Ok(report) => {
            if let Some(summary) = &report.summary {
                eprintln!("{summary}");
            }
            if report.failed {
                eprintln!("error: coupled eigenfrequencies do not interlace with the bath");
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
