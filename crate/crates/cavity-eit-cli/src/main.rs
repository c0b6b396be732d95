//! Configuration-driven scenario runner for the cavity noise-spectrum
//! library: sweeps spectra, locates peaks, reports working points, and runs
//! the bundled numeric-vs-closed-form validation suite.

mod config;
mod report;
mod validate;

use std::path::{Path, PathBuf};

use cavity_eit::{solve_steady_state, Mode, SpectrumEngine};
use clap::{Args, Parser, Subcommand};

use config::ScenarioConfig;
use report::{Metadata, PeakRecord, PeaksJson, SteadyJson, ValidationJson, SCHEMA_VERSION};

/// Errors mapped onto process exit codes.
#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("config error: {0}")]
    Config(String),
    #[error("{0}")]
    Physics(#[from] cavity_eit::Error),
    #[error("{0}")]
    Io(String),
    #[error("validation suite failed ({failed} of {total} records)")]
    ValidationFailed { failed: usize, total: usize },
}

impl CliError {
    fn config(message: impl Into<String>) -> Self {
        CliError::Config(message.into())
    }

    /// Exit codes: 2 config problems, 3 unstable working point, 4 steady
    /// state not found, 1 any other failure.
    fn exit_code(&self) -> i32 {
        use cavity_eit::Error as E;
        match self {
            CliError::Config(_) => 2,
            CliError::Physics(E::Unstable { .. }) => 3,
            CliError::Physics(E::NoConvergence { .. }) => 4,
            CliError::Physics(
                E::NegativeRate { .. }
                | E::ZeroAtoms
                | E::AsymmetricCoupling { .. }
                | E::ZeroDrive
                | E::Domain { .. },
            ) => 2,
            CliError::Physics(_) => 1,
            CliError::Io(_) => 1,
            CliError::ValidationFailed { .. } => 1,
        }
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "cavity-eit-cli",
    version,
    about = "Quadrature-noise spectra of a two-mode cavity with lambda atoms"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct Common {
    /// Scenario TOML file.
    #[arg(long)]
    config: PathBuf,
    /// Override the config's outputs.csv_path.
    #[arg(long)]
    out_csv: Option<PathBuf>,
    /// Override the config's outputs.json_path.
    #[arg(long)]
    out_json: Option<PathBuf>,
    /// Interpret config frequencies (and report output frequencies) in
    /// units of atom_decay1.
    #[arg(long)]
    gamma_units: bool,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Sweep the output quadrature-noise spectra over the frequency grid.
    Spectrum(Common),
    /// Locate the highest spectrum maximum inside the grid window.
    Peaks(Common),
    /// Solve and report the semiclassical working point.
    Steady(Common),
    /// Run the bundled validation suite comparing numerics to closed forms.
    Validate(Common),
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Spectrum(_) => "spectrum",
            Command::Peaks(_) => "peaks",
            Command::Steady(_) => "steady",
            Command::Validate(_) => "validate",
        }
    }

    fn common(&self) -> &Common {
        match self {
            Command::Spectrum(c)
            | Command::Peaks(c)
            | Command::Steady(c)
            | Command::Validate(c) => c,
        }
    }
}

fn main() {
    let cli = Cli::parse();
    if let Err(e) = run(&cli.command) {
        eprintln!("error: {e}");
        std::process::exit(e.exit_code());
    }
}

fn run(command: &Command) -> Result<(), CliError> {
    let common = command.common();
    let config = ScenarioConfig::load(&common.config)?;
    config.check_command(command.name())?;
    let metadata = Metadata::new(command.name(), common.gamma_units);

    match command {
        Command::Spectrum(_) => run_spectrum(&config, common, metadata),
        Command::Peaks(_) => run_peaks(&config, common, metadata),
        Command::Steady(_) => run_steady(&config, common, metadata),
        Command::Validate(_) => run_validate(&config, common, metadata),
    }
}

fn modes_of(config: &ScenarioConfig) -> Vec<Mode> {
    config
        .modes
        .iter()
        .map(|m| if *m == 1 { Mode::Pump } else { Mode::Probe })
        .collect()
}

fn csv_target<'a>(config: &'a ScenarioConfig, common: &'a Common) -> Option<&'a Path> {
    common
        .out_csv
        .as_deref()
        .or(config.outputs.csv_path.as_deref())
}

fn json_target<'a>(config: &'a ScenarioConfig, common: &'a Common) -> Option<&'a Path> {
    common
        .out_json
        .as_deref()
        .or(config.outputs.json_path.as_deref())
}

fn run_spectrum(
    config: &ScenarioConfig,
    common: &Common,
    metadata: Metadata,
) -> Result<(), CliError> {
    let grid = config.require_grid()?;
    let unit = config.frequency_unit(common.gamma_units);
    let omegas = grid.omegas(unit);
    let params = config.model_params(common.gamma_units);
    let engine = SpectrumEngine::new(&params)?;

    let mut tables = Vec::new();
    for mode in modes_of(config) {
        for &theta in &config.thetas {
            tables.push(engine.sweep(mode, theta, &omegas)?);
        }
    }

    let csv_path = csv_target(config, common)
        .ok_or_else(|| CliError::config("spectrum needs outputs.csv_path or --out-csv"))?;
    report::write_spectrum_csv(csv_path, &tables, unit)?;
    let rows = tables.len() * omegas.len();
    let gaps: usize = tables
        .iter()
        .flat_map(|t| &t.rows)
        .filter(|r| r.value.is_none())
        .count();
    println!(
        "wrote {} data rows ({} gaps) to {}",
        rows,
        gaps,
        csv_path.display()
    );
    if let Some(json_path) = json_target(config, common) {
        report::write_spectrum_json(json_path, &tables, unit, metadata)?;
        println!("wrote JSON mirror to {}", json_path.display());
    }
    Ok(())
}

fn run_peaks(config: &ScenarioConfig, common: &Common, metadata: Metadata) -> Result<(), CliError> {
    let grid = config.require_grid()?;
    let unit = config.frequency_unit(common.gamma_units);
    let window = (unit * grid.start, unit * grid.stop);
    let params = config.model_params(common.gamma_units);
    let engine = SpectrumEngine::new(&params)?;

    let mut peaks = Vec::new();
    for mode in modes_of(config) {
        for &theta in &config.thetas {
            let peak = engine.find_peak(mode, theta, window, grid.points)?;
            peaks.push(PeakRecord::from_report(mode.index(), theta, &peak, unit));
        }
    }

    let json_path = json_target(config, common)
        .ok_or_else(|| CliError::config("peaks needs outputs.json_path or --out-json"))?;
    report::write_json(
        json_path,
        &PeaksJson {
            schema_version: SCHEMA_VERSION,
            metadata,
            peaks,
        },
    )?;
    println!("wrote peak report to {}", json_path.display());
    Ok(())
}

fn run_steady(
    config: &ScenarioConfig,
    common: &Common,
    metadata: Metadata,
) -> Result<(), CliError> {
    let params = config.model_params(common.gamma_units).validated()?;
    let steady = solve_steady_state(&params)?;
    let m = &steady.mean;
    let [p00, p11, p22] = m.populations();

    let json_path = json_target(config, common)
        .ok_or_else(|| CliError::config("steady needs outputs.json_path or --out-json"))?;
    report::write_json(
        json_path,
        &SteadyJson {
            schema_version: SCHEMA_VERSION,
            metadata,
            a1_re: m.a1.re,
            a1_im: m.a1.im,
            a2_re: m.a2.re,
            a2_im: m.a2.im,
            s10_re: m.s10.re,
            s10_im: m.s10.im,
            s20_re: m.s20.re,
            s20_im: m.s20.im,
            s21_re: m.s21.re,
            s21_im: m.s21.im,
            w1: m.w1,
            w2: m.w2,
            p00,
            p11,
            p22,
            drive1_re: steady.drive1.re,
            drive1_im: steady.drive1.im,
            drive2_re: steady.drive2.re,
            drive2_im: steady.drive2.im,
            residual: steady.residual,
        },
    )?;
    println!("wrote working point to {}", json_path.display());
    Ok(())
}

fn run_validate(
    config: &ScenarioConfig,
    common: &Common,
    metadata: Metadata,
) -> Result<(), CliError> {
    let (records, pass) = validate::run_suite()?;
    for record in &records {
        let verdict = if record.pass { "PASS" } else { "FAIL" };
        println!(
            "{verdict} {}: observed {:.6e} vs expected {:.6e} (tol {:.1e})",
            record.name, record.observed, record.expected, record.tolerance
        );
        for note in &record.notes {
            println!("     note: {note}");
        }
    }
    if let Some(json_path) = json_target(config, common) {
        report::write_json(
            json_path,
            &ValidationJson {
                schema_version: SCHEMA_VERSION,
                metadata,
                records: records.clone(),
                pass,
            },
        )?;
        println!("wrote validation report to {}", json_path.display());
    }
    if pass {
        println!("validation suite: all {} records pass", records.len());
        Ok(())
    } else {
        let failed = records.iter().filter(|r| !r.pass).count();
        Err(CliError::ValidationFailed {
            failed,
            total: records.len(),
        })
    }
}
