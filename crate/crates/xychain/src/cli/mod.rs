//! Command-line front end: argument model, subcommand runners and exit codes.
//!
//! Tables go to `--output` when given, otherwise to
//! `$XYCHAIN_OUTPUT_DIR/<subcommand>.<ext>` when that variable is set, and to
//! standard output in all other cases. Every file output gets a
//! `<stem>.manifest.json` beside it.

pub mod verify;

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::circuits::{
    below_cutoff_state, build_bog_layer, build_fourier, build_laplacian, build_position_evolution, build_rg,
    build_tfd, build_udis, Circuit,
};
use crate::error::{Error, Result};
use crate::experiments::{
    critical_fit, gaussian_ground_entropy_curve, run_expz_coarse, run_expz_from_state, run_tfd_entropy_vs_beta,
    EntropyCurve, FitModel, Manifest, OutputFormat, SpacetimeGrid, Table,
};
use crate::model::{build_hamiltonian, exact_spectrum, HamiltonianForm, ModeTable, ModelParams};
use crate::sim::circuit_to_unitary;
use crate::sim::unitary::adjoint;
use crate::sim::StateVector;

pub use verify::{run_oracle_suite, Check, MAX_VERIFY_SITES};

/// Environment variable naming the default output directory.
pub const OUTPUT_DIR_ENV: &str = "XYCHAIN_OUTPUT_DIR";

/// Exit status of a successful run.
pub const EXIT_SUCCESS: i32 = 0;
/// Exit status when an oracle comparison fails.
pub const EXIT_VERIFICATION_FAILED: i32 = 1;
/// Exit status for malformed arguments or out-of-range configurations.
pub const EXIT_USAGE: i32 = 2;

/// Exact two-local circuits for the periodic transverse-field XY chain.
#[derive(Debug, Parser)]
#[command(name = "xychain", version)]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Many-body spectrum from mode energies, cross-checked against the
    /// dense Hamiltonian rotated by the diagonalizing circuit.
    Spectrum(SpectrumArgs),
    /// ⟨Z_i⟩(t) after exciting one site of the chain.
    Evolve(EvolveArgs),
    /// ⟨Z_i⟩(t) on the fine chain and on its coarse-grained block.
    Rg(RgArgs),
    /// Thermofield-double entropy tables across inverse temperatures.
    Tfd(TfdArgs),
    /// Block entropy curve with logarithmic and linear fits.
    Entropy(EntropyArgs),
    /// Writes a circuit in the line-oriented text format.
    ExportCircuit(ExportArgs),
    /// Runs the dense-oracle suite and reports each comparison.
    Verify(VerifyArgs),
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Spectrum(_) => "spectrum",
            Command::Evolve(_) => "evolve",
            Command::Rg(_) => "rg",
            Command::Tfd(_) => "tfd",
            Command::Entropy(_) => "entropy",
            Command::ExportCircuit(_) => "export-circuit",
            Command::Verify(_) => "verify",
        }
    }
}

fn finite(text: &str) -> std::result::Result<f64, String> {
    let value: f64 = text.parse().map_err(|e| format!("{e}"))?;
    if value.is_finite() {
        Ok(value)
    } else {
        Err(format!("{text} is not a finite number"))
    }
}

/// Chain parameters shared by every subcommand.
#[derive(Debug, Clone, Args, Serialize)]
struct ModelArgs {
    /// Number of sites.
    #[arg(long, default_value_t = 8)]
    n: usize,
    /// Hopping strength relative to the transverse field.
    #[arg(long, default_value_t = 1.0, value_parser = finite, allow_negative_numbers = true)]
    lambda: f64,
    /// Anisotropy.
    #[arg(long, default_value_t = 1.0, value_parser = finite, allow_negative_numbers = true)]
    gamma: f64,
    /// Inverse temperature.
    #[arg(long, default_value_t = 1.0, value_parser = finite)]
    beta: f64,
}

impl ModelArgs {
    fn params(&self) -> Result<ModelParams> {
        ModelParams::new(self.n, self.lambda, self.gamma, self.beta)
    }
}

#[derive(Debug, Clone, Args, Serialize)]
struct OutputArgs {
    /// Output file. Defaults to the directory in XYCHAIN_OUTPUT_DIR, then
    /// to standard output.
    #[arg(long)]
    output: Option<PathBuf>,
    /// Table encoding.
    #[arg(long, value_enum, default_value_t = OutputFormat::Csv)]
    format: OutputFormat,
}

#[derive(Debug, Clone, Args, Serialize)]
struct SpectrumArgs {
    #[command(flatten)]
    model: ModelArgs,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Debug, Clone, Args, Serialize)]
struct TimeArgs {
    /// Comma-separated sample times. Defaults to 0, 0.5, ..., 10.
    #[arg(long, value_delimiter = ',', value_parser = finite, allow_negative_numbers = true)]
    times: Vec<f64>,
}

impl TimeArgs {
    fn resolved(&self) -> Vec<f64> {
        if self.times.is_empty() {
            (0..=20).map(|i| 0.5 * i as f64).collect()
        } else {
            self.times.clone()
        }
    }
}

#[derive(Debug, Clone, Args, Serialize)]
struct EvolveArgs {
    #[command(flatten)]
    model: ModelArgs,
    /// Initially occupied site. Defaults to n/2.
    #[arg(long)]
    site: Option<usize>,
    #[command(flatten)]
    times: TimeArgs,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Debug, Clone, Args, Serialize)]
struct RgArgs {
    #[command(flatten)]
    model: ModelArgs,
    /// Number of modes kept by the coarse graining. Defaults to n/2.
    #[arg(long)]
    keep: Option<usize>,
    /// Occupied site of the coarse chain used to build the initial state.
    /// Defaults to keep/2.
    #[arg(long)]
    site: Option<usize>,
    #[command(flatten)]
    times: TimeArgs,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Debug, Clone, Args, Serialize)]
struct TfdArgs {
    #[command(flatten)]
    model: ModelArgs,
    /// Comma-separated inverse temperatures.
    #[arg(long, value_delimiter = ',', value_parser = finite, default_values_t = [0.0, 0.5, 1.0, 2.0, 10.0])]
    betas: Vec<f64>,
    #[command(flatten)]
    output: OutputArgs,
}

/// State whose block entropy is measured.
#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
enum EntropySource {
    /// Ground state of the chain.
    Ground,
    /// Left register of the thermofield double at `--beta`.
    Tfd,
}

#[derive(Debug, Clone, Args, Serialize)]
struct EntropyArgs {
    #[command(flatten)]
    model: ModelArgs,
    /// State to measure.
    #[arg(long, value_enum, default_value_t = EntropySource::Ground)]
    state: EntropySource,
    #[command(flatten)]
    output: OutputArgs,
}

/// Circuit family written by `export-circuit`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
enum CircuitFamily {
    /// Bogoliubov layer followed by the Fourier transform.
    Udis,
    /// Fermionic Fourier transform.
    Fourier,
    /// Bogoliubov layer alone.
    Bog,
    /// Position-space time evolution for `--time`.
    Evolution,
    /// Momentum-space coarse graining keeping `--keep` modes.
    Rg,
    /// Laplace-gate layer preparing Boltzmann amplitudes at `--beta`.
    Laplacian,
    /// Thermofield-double preparation at `--beta`.
    Tfd,
}

#[derive(Debug, Clone, Args, Serialize)]
struct ExportArgs {
    #[command(flatten)]
    model: ModelArgs,
    /// Circuit to export.
    #[arg(long, value_enum, default_value_t = CircuitFamily::Udis)]
    circuit: CircuitFamily,
    /// Evolution time.
    #[arg(long, default_value_t = 1.0, value_parser = finite, allow_negative_numbers = true)]
    time: f64,
    /// Number of modes kept by the coarse graining. Defaults to n/2.
    #[arg(long)]
    keep: Option<usize>,
    /// Output file. Defaults to the directory in XYCHAIN_OUTPUT_DIR, then
    /// to standard output.
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Debug, Clone, Args, Serialize)]
struct VerifyArgs {
    #[command(flatten)]
    model: ModelArgs,
    /// Seed for the random angles and states.
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

/// Where a run's primary output goes.
enum Destination {
    Stream,
    File(PathBuf),
}

fn destination(explicit: Option<&Path>, command: &str, extension: &str) -> Destination {
    if let Some(path) = explicit {
        return Destination::File(path.to_path_buf());
    }
    match std::env::var_os(OUTPUT_DIR_ENV) {
        Some(dir) if !dir.is_empty() => Destination::File(PathBuf::from(dir).join(format!("{command}.{extension}"))),
        _ => Destination::Stream,
    }
}

fn extension(format: OutputFormat) -> &'static str {
    match format {
        OutputFormat::Csv => "csv",
        OutputFormat::Json => "json",
    }
}

/// Writes `body` to its destination and, for files, the manifest beside it.
fn emit(
    out: &mut dyn Write,
    target: Destination,
    body: &[u8],
    command: &str,
    parameters: &impl Serialize,
    summary: Option<serde_json::Value>,
) -> Result<()> {
    match target {
        Destination::Stream => out.write_all(body)?,
        Destination::File(path) => {
            if let Some(parent) = path.parent().filter(|p| !p.as_os_str().is_empty()) {
                std::fs::create_dir_all(parent)?;
            }
            std::fs::write(&path, body)?;
            let name = path.file_name().map(|s| s.to_string_lossy().into_owned()).unwrap_or_default();
            let mut manifest = Manifest::new(command, serde_json::to_value(parameters)?, vec![name]);
            if let Some(summary) = summary {
                manifest = manifest.with_summary(summary);
            }
            manifest.write_to(&Manifest::path_for(&path))?;
        }
    }
    Ok(())
}

fn emit_table(
    out: &mut dyn Write,
    table: &Table,
    output: &OutputArgs,
    command: &str,
    parameters: &impl Serialize,
    summary: Option<serde_json::Value>,
) -> Result<()> {
    let body = table.render(output.format)?;
    let target = destination(output.output.as_deref(), command, extension(output.format));
    emit(out, target, body.as_bytes(), command, parameters, summary)
}

/// Outcome of a subcommand that ran to completion.
enum Outcome {
    Success,
    VerificationFailed,
}

/// Parses `argv` (including the program name), runs the subcommand and
/// returns the process exit status.
pub fn dispatch<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let informational = matches!(
                e.kind(),
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion
            );
            return if informational {
                let _ = write!(out, "{}", e.render());
                EXIT_SUCCESS
            } else {
                let _ = write!(err, "{}", e.render());
                EXIT_USAGE
            };
        }
    };
    match run(&cli.command, out, err) {
        Ok(Outcome::Success) => EXIT_SUCCESS,
        Ok(Outcome::VerificationFailed) => EXIT_VERIFICATION_FAILED,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            match e {
                Error::Argument(_) | Error::Validation(_) | Error::Capacity(_) | Error::Parse { .. } => {
                    let _ = writeln!(err, "run `xychain {} --help` for usage", cli.command.name());
                    EXIT_USAGE
                }
                _ => EXIT_VERIFICATION_FAILED,
            }
        }
    }
}

fn run(command: &Command, out: &mut dyn Write, err: &mut dyn Write) -> Result<Outcome> {
    match command {
        Command::Spectrum(args) => run_spectrum(args, out, err),
        Command::Evolve(args) => run_evolve(args, out),
        Command::Rg(args) => run_rg(args, out),
        Command::Tfd(args) => run_tfd(args, out),
        Command::Entropy(args) => run_entropy(args, out, err),
        Command::ExportCircuit(args) => run_export(args, out),
        Command::Verify(args) => run_verify(args, out),
    }
}

/// Largest deviation between the exact spectrum and the sorted diagonal of
/// `U† H U` shifted to start at zero.
fn dense_spectrum_deviation(params: &ModelParams, levels: &[f64]) -> Result<f64> {
    let u = circuit_to_unitary(&build_udis(params)?, params.n())?;
    let h = build_hamiltonian(params, HamiltonianForm::Fermionic)?;
    let mut diagonal: Vec<f64> = adjoint(&u).dot(&h).dot(&u).diag().iter().map(|z| z.re).collect();
    let floor = diagonal.iter().copied().fold(f64::INFINITY, f64::min);
    diagonal.iter_mut().for_each(|e| *e -= floor);
    diagonal.sort_by(f64::total_cmp);
    Ok(levels
        .iter()
        .zip(&diagonal)
        .map(|(a, b)| (a - b).abs())
        .fold(0.0, f64::max))
}

fn run_spectrum(args: &SpectrumArgs, out: &mut dyn Write, err: &mut dyn Write) -> Result<Outcome> {
    let params = args.model.params()?;
    if params.n() > MAX_VERIFY_SITES {
        return Err(Error::Capacity(format!(
            "the dense spectrum check supports at most {MAX_VERIFY_SITES} sites"
        )));
    }
    let spectrum = exact_spectrum(&params)?;
    let deviation = dense_spectrum_deviation(&params, spectrum.levels())?;
    let mut table = Table::new(&["index", "energy"]);
    for (i, &e) in spectrum.levels().iter().enumerate() {
        table.push(vec![i.into(), e.into()]);
    }
    let summary = serde_json::json!({ "dense_deviation": deviation });
    emit_table(out, &table, &args.output, "spectrum", args, Some(summary))?;
    Ok(if deviation <= 1e-8 {
        Outcome::Success
    } else {
        let _ = writeln!(err, "dense spectrum check failed: deviation {deviation:e}");
        Outcome::VerificationFailed
    })
}

fn grid_table(grids: &[&SpacetimeGrid]) -> Table {
    let mut table = Table::new(&["chain_sites", "time", "site", "expz"]);
    for grid in grids {
        for (t, row) in grid.times.iter().zip(&grid.values) {
            for (site, z) in grid.sites.iter().zip(row) {
                table.push(vec![grid.sites.len().into(), (*t).into(), (*site).into(), (*z).into()]);
            }
        }
    }
    table
}

fn run_evolve(args: &EvolveArgs, out: &mut dyn Write) -> Result<Outcome> {
    let params = args.model.params()?;
    let site = args.site.unwrap_or(params.n() / 2);
    if site >= params.n() {
        return Err(crate::error::argument(format!("site {site} out of range for {} sites", params.n())));
    }
    let initial = StateVector::with_occupied(params.n(), &[site])?;
    let grid = run_expz_from_state(&params, &initial, &args.times.resolved())?;
    emit_table(out, &grid_table(&[&grid]), &args.output, "evolve", args, None)?;
    Ok(Outcome::Success)
}

fn run_rg(args: &RgArgs, out: &mut dyn Write) -> Result<Outcome> {
    let params = args.model.params()?;
    let keep = args.keep.unwrap_or(params.n() / 2);
    let site = args.site.unwrap_or(keep / 2);
    if site >= keep {
        return Err(crate::error::argument(format!("site {site} out of range for {keep} kept modes")));
    }
    let low = StateVector::with_occupied(keep, &[site])?;
    let initial = below_cutoff_state(&params, keep, &low)?;
    let times = args.times.resolved();
    let fine = run_expz_from_state(&params, &initial, &times)?;
    let coarse = run_expz_coarse(&params, keep, &initial, &times)?;
    emit_table(out, &grid_table(&[&fine, &coarse]), &args.output, "rg", args, None)?;
    Ok(Outcome::Success)
}

fn run_tfd(args: &TfdArgs, out: &mut dyn Write) -> Result<Outcome> {
    let params = args.model.params()?;
    let rows = run_tfd_entropy_vs_beta(&params, &args.betas)?;
    let mut table = Table::new(&["beta", "length", "entropy", "half_cut"]);
    for row in &rows {
        for (l, s) in row.curve.lengths.iter().zip(&row.curve.entropies) {
            table.push(vec![row.beta.into(), (*l).into(), (*s).into(), row.half_cut.into()]);
        }
    }
    emit_table(out, &table, &args.output, "tfd", args, None)?;
    Ok(Outcome::Success)
}

fn fit_summary(curve: &EntropyCurve) -> Result<serde_json::Value> {
    let log = critical_fit(curve, FitModel::Log)?;
    let linear = critical_fit(curve, FitModel::Linear)?;
    Ok(serde_json::json!({ "log": log, "linear": linear }))
}

fn run_entropy(args: &EntropyArgs, out: &mut dyn Write, err: &mut dyn Write) -> Result<Outcome> {
    let params = args.model.params()?;
    let curve = match args.state {
        EntropySource::Ground => gaussian_ground_entropy_curve(&params)?,
        EntropySource::Tfd => {
            let mut rows = run_tfd_entropy_vs_beta(&params, &[params.beta()])?;
            rows.remove(0).curve
        }
    };
    let mut table = Table::new(&["length", "entropy"]);
    for (l, s) in curve.lengths.iter().zip(&curve.entropies) {
        table.push(vec![(*l).into(), (*s).into()]);
    }
    let summary = fit_summary(&curve)?;
    writeln!(err, "fits: {summary}")?;
    emit_table(out, &table, &args.output, "entropy", args, Some(summary))?;
    Ok(Outcome::Success)
}

fn export_circuit(args: &ExportArgs, params: &ModelParams) -> Result<Circuit> {
    let keep = args.keep.unwrap_or(params.n() / 2);
    match args.circuit {
        CircuitFamily::Udis => build_udis(params),
        CircuitFamily::Fourier => build_fourier(params.n()),
        CircuitFamily::Bog => build_bog_layer(&ModeTable::new(params)?),
        CircuitFamily::Evolution => build_position_evolution(params, args.time),
        CircuitFamily::Rg => build_rg(params, keep),
        CircuitFamily::Laplacian => build_laplacian(&ModeTable::new(params)?, params.beta()),
        CircuitFamily::Tfd => build_tfd(&ModeTable::new(params)?, params.beta()),
    }
}

fn run_export(args: &ExportArgs, out: &mut dyn Write) -> Result<Outcome> {
    let params = args.model.params()?;
    let circuit = export_circuit(args, &params)?;
    let target = destination(args.output.as_deref(), "export-circuit", "txt");
    emit(out, target, circuit.to_text().as_bytes(), "export-circuit", args, None)?;
    Ok(Outcome::Success)
}

fn run_verify(args: &VerifyArgs, out: &mut dyn Write) -> Result<Outcome> {
    let params = args.model.params()?;
    let checks = run_oracle_suite(&params, args.seed)?;
    for check in &checks {
        let status = if check.passed() { "PASS" } else { "FAIL" };
        writeln!(
            out,
            "{status} {} deviation={:.3e} tolerance={:.1e}",
            check.name, check.deviation, check.tolerance
        )?;
    }
    Ok(if checks.iter().all(Check::passed) {
        Outcome::Success
    } else {
        Outcome::VerificationFailed
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let argv = std::iter::once("xychain").chain(args.iter().copied());
        let code = dispatch(argv, &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn spectrum_rows_match_exact_levels() {
        let (code, out, _) = run_args(&["spectrum", "--n", "4", "--lambda", "1", "--gamma", "1"]);
        assert_eq!(code, EXIT_SUCCESS);
        let levels = exact_spectrum(&ModelParams::ground(4, 1.0, 1.0).unwrap()).unwrap();
        let lines: Vec<&str> = out.lines().collect();
        assert_eq!(lines[0], "index,energy");
        assert_eq!(lines.len(), 17);
        for (line, expected) in lines[1..].iter().zip(levels.levels()) {
            let value: f64 = line.split(',').nth(1).unwrap().parse().unwrap();
            assert!((value - expected).abs() < 1e-12);
        }
    }

    #[test]
    fn unknown_flag_is_a_usage_error() {
        let (code, out, err) = run_args(&["evolve", "--n", "8", "--lambda", "1", "--gamma", "1", "--bogus"]);
        assert_eq!(code, EXIT_USAGE);
        assert!(out.is_empty());
        assert!(err.contains("Usage"));
    }

    #[test]
    fn out_of_domain_values_are_usage_errors() {
        assert_eq!(run_args(&["spectrum", "--n", "3"]).0, EXIT_USAGE);
        assert_eq!(run_args(&["spectrum", "--lambda", "nan"]).0, EXIT_USAGE);
        assert_eq!(run_args(&["verify", "--n", "16"]).0, EXIT_USAGE);
        assert_eq!(run_args(&["evolve", "--n", "4", "--site", "4"]).0, EXIT_USAGE);
        assert_eq!(run_args(&["frobnicate"]).0, EXIT_USAGE);
    }

    #[test]
    fn help_goes_to_standard_output() {
        let (code, out, _) = run_args(&["--help"]);
        assert_eq!(code, EXIT_SUCCESS);
        assert!(out.contains("export-circuit"));
    }

    #[test]
    fn exported_circuit_parses_back() {
        let (code, out, _) = run_args(&["export-circuit", "--n", "4", "--circuit", "tfd", "--beta", "0.5"]);
        assert_eq!(code, EXIT_SUCCESS);
        let circuit = Circuit::from_text(&out).unwrap();
        let expected = build_tfd(&ModeTable::new(&ModelParams::ground(4, 1.0, 1.0).unwrap()).unwrap(), 0.5).unwrap();
        assert_eq!(circuit.len(), expected.len());
    }

    #[test]
    fn repeated_runs_are_identical() {
        let args = ["rg", "--n", "8", "--times", "0,1.5", "--format", "json"];
        assert_eq!(run_args(&args), run_args(&args));
    }
}
