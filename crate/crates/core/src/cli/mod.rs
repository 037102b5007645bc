//! Command-line front end: `forward`, `inverse`, `roundtrip` and `probe`.
//!
//! Exit codes: 0 success, 2 input validation, 3 numerical failure,
//! 4 rank-deficient frequency matrix.

use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use thiserror::Error;

mod descriptor;
mod json;
mod report;

pub use descriptor::{parse_separated_matrix, Mode, Run, RunDescriptor};
pub use report::Report;

use crate::error::Error;
use crate::forward::{local_scale, locate_roots};
use crate::inverse::{identify_boundary_conditions, stability_probe, ProbeSettings};
use crate::plucker::minors_of;
use crate::spectral::{characteristic_determinant, Annulus};
use report::{
    AnnulusReport, ForwardReport, IdentificationReport, InverseReport, ProbeReport, RootReport,
    RoundtripReport,
};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Validation(String),
    #[error("numerical failure: {0}")]
    Numerical(Error),
    #[error("{0}")]
    RankDeficient(Error),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Validation(_) => 2,
            CliError::Numerical(_) => 3,
            CliError::RankDeficient(_) => 4,
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::RankDeficientSystem { .. } => CliError::RankDeficient(e),
            other => CliError::Numerical(other),
        }
    }
}

#[derive(Debug, Parser)]
#[command(name = "ringbc", version, about = "Annular membrane frequencies and boundary-condition identification")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Eigenvalues of a given boundary matrix.
    Forward(CommonArgs),
    /// Boundary matrix from three eigenvalues.
    Inverse(CommonArgs),
    /// Forward then inverse, reporting whether the matrix is recovered.
    Roundtrip(CommonArgs),
    /// Identification error under seeded eigenvalue noise.
    Probe(CommonArgs),
}

impl Command {
    pub fn mode(&self) -> Mode {
        match self {
            Command::Forward(_) => Mode::Forward,
            Command::Inverse(_) => Mode::Inverse,
            Command::Roundtrip(_) => Mode::Roundtrip,
            Command::Probe(_) => Mode::Probe,
        }
    }

    pub fn args(&self) -> &CommonArgs {
        match self {
            Command::Forward(a) | Command::Inverse(a) | Command::Roundtrip(a) | Command::Probe(a) => a,
        }
    }
}

/// Flags shared by every subcommand. Flags override descriptor fields.
#[derive(Debug, Clone, Default, Args)]
pub struct CommonArgs {
    /// JSON run descriptor.
    #[arg(long)]
    pub input: Option<PathBuf>,
    /// Inner radius.
    #[arg(long = "a", allow_hyphen_values = true)]
    pub inner: Option<f64>,
    /// Outer radius.
    #[arg(long = "b", allow_hyphen_values = true)]
    pub outer: Option<f64>,
    /// Write the report here instead of standard output.
    #[arg(long)]
    pub output: Option<PathBuf>,
    /// Root refinement tolerance.
    #[arg(long)]
    pub tolerance: Option<f64>,
    /// Minimum sigma3/sigma1 of the frequency matrix.
    #[arg(long)]
    pub rank_tol: Option<f64>,
    #[arg(long)]
    pub seed: Option<u64>,
    /// Number of eigenvalues (forward).
    #[arg(long)]
    pub count: Option<usize>,
    /// Eigenvalue (inverse); repeat three times.
    #[arg(long = "lambda", allow_hyphen_values = true)]
    pub lambdas: Vec<f64>,
    /// Separated conditions "k1,k2,k3,k4" for [[k1,-k2,0,0],[0,0,k3,k4]].
    #[arg(long, allow_hyphen_values = true)]
    pub matrix: Option<String>,
    /// Noise level (probe); repeatable.
    #[arg(long = "delta")]
    pub deltas: Vec<f64>,
    /// Trials per noise level (probe).
    #[arg(long)]
    pub trials: Option<usize>,
    /// Upper end of the eigenvalue search.
    #[arg(long)]
    pub lambda_max: Option<f64>,
    /// Scan step of the eigenvalue search.
    #[arg(long)]
    pub scan_step: Option<f64>,
}

impl CommonArgs {
    /// Reads the descriptor file, if any, and applies the flags on top.
    pub fn descriptor(&self) -> Result<RunDescriptor, CliError> {
        let mut d = match &self.input {
            Some(path) => {
                let text = std::fs::read_to_string(path).map_err(|e| {
                    CliError::Validation(format!("cannot read {}: {e}", path.display()))
                })?;
                RunDescriptor::from_json_str(&text)?
            }
            None => RunDescriptor::default(),
        };
        if self.inner.is_some() {
            d.annulus.a = self.inner;
        }
        if self.outer.is_some() {
            d.annulus.b = self.outer;
        }
        if let Some(text) = &self.matrix {
            d.separated = Some(parse_separated_matrix(text)?);
            d.matrix = None;
        }
        if !self.lambdas.is_empty() {
            d.lambdas = Some(self.lambdas.clone());
        }
        if !self.deltas.is_empty() {
            d.probe.deltas = Some(self.deltas.clone());
        }
        macro_rules! take {
            ($($flag:ident => $($field:ident).+),* $(,)?) => {
                $(if let Some(v) = self.$flag.clone() { d.$($field).+ = Some(v); })*
            };
        }
        take! {
            output => output,
            tolerance => solver.tolerance,
            rank_tol => solver.rank_tol,
            seed => probe.seed,
            count => count,
            trials => probe.trials,
            lambda_max => solver.lambda_max,
            scan_step => solver.scan_step,
        }
        Ok(d)
    }
}

fn annulus_report(a: &Annulus) -> AnnulusReport {
    AnnulusReport { a: a.inner(), b: a.outer() }
}

/// Runs a validated descriptor and builds its report.
pub fn execute(run: &Run) -> Result<Report, CliError> {
    let version = SCHEMA_VERSION;
    match run {
        Run::Forward { annulus, bc, count, search } => {
            let located = locate_roots(bc, annulus, *count, search)?;
            let mut roots = Vec::with_capacity(located.len());
            for r in &located {
                let residual = characteristic_determinant(bc, annulus, r.lambda)?.abs();
                let scale = local_scale(bc, annulus, r.cell);
                let relative_residual = if scale > 0.0 { residual / scale } else { 0.0 };
                roots.push(RootReport { lambda: r.lambda, residual, relative_residual });
            }
            Ok(Report::Forward(ForwardReport {
                schema_version: version,
                mode: Mode::Forward.name(),
                annulus: annulus_report(annulus),
                matrix: *bc.rows(),
                count: *count,
                eigenvalues: located.iter().map(|r| r.lambda).collect(),
                roots,
            }))
        }
        Run::Inverse { annulus, lambdas, rank_tol } => {
            let result = identify_boundary_conditions(annulus, *lambdas, *rank_tol)?;
            Ok(Report::Inverse(InverseReport {
                schema_version: version,
                mode: Mode::Inverse.name(),
                annulus: annulus_report(annulus),
                identification: (&result).into(),
            }))
        }
        Run::Roundtrip { annulus, bc, search, rank_tol, equivalence_tol } => {
            let located = locate_roots(bc, annulus, 3, search)?;
            let eigenvalues = [located[0].lambda, located[1].lambda, located[2].lambda];
            let result = identify_boundary_conditions(annulus, eigenvalues, *rank_tol)?;
            let truth = minors_of(bc)?;
            let distance = result.projected.distance(&truth);
            Ok(Report::Roundtrip(RoundtripReport {
                schema_version: version,
                mode: Mode::Roundtrip.name(),
                annulus: annulus_report(annulus),
                matrix: *bc.rows(),
                true_minors: truth.minors(),
                eigenvalues,
                identification: IdentificationReport::from(&result),
                plucker_distance: distance,
                equivalence_tol: *equivalence_tol,
                equivalent: distance <= *equivalence_tol,
            }))
        }
        Run::Probe { annulus, bc, deltas, trials, seed, search, rank_tol } => {
            let settings = ProbeSettings { trials: *trials, seed: *seed, rank_tol: *rank_tol };
            let rows = stability_probe(annulus, bc, deltas, &settings, search)?;
            Ok(Report::Probe(ProbeReport {
                schema_version: version,
                mode: Mode::Probe.name(),
                annulus: annulus_report(annulus),
                matrix: *bc.rows(),
                seed: *seed,
                trials: *trials,
                rows: rows.iter().map(Into::into).collect(),
            }))
        }
    }
}

/// Full invocation: descriptor, validation, execution, output.
///
/// The report goes to `--output` if given, otherwise to `stdout`; the
/// summary always goes to `stderr`.
pub fn run(command: &Command, stdout: &mut dyn Write, stderr: &mut dyn Write) -> Result<(), CliError> {
    let descriptor = command.args().descriptor()?;
    let validated = descriptor.validate(command.mode())?;
    let report = execute(&validated)?;
    let text = report.to_json();
    match &descriptor.output {
        Some(path) => std::fs::write(path, &text).map_err(|e| {
            CliError::Validation(format!("cannot write {}: {e}", path.display()))
        })?,
        None => stdout
            .write_all(text.as_bytes())
            .map_err(|e| CliError::Validation(format!("cannot write report: {e}")))?,
    }
    // The summary is informational; a closed stderr is not an error.
    let _ = writeln!(stderr, "{}", report.summary());
    Ok(())
}
