//! Run descriptors: a JSON file plus command-line overrides, validated into
//! a fully specified [`Run`].

use std::path::PathBuf;

use serde::Deserialize;

use super::CliError;
use crate::forward::SearchConfig;
use crate::inverse::DEFAULT_RANK_TOL;
use crate::spectral::{Annulus, BoundaryConditions, Matrix2x4};

pub const DEFAULT_COUNT: usize = 3;
pub const DEFAULT_TRIALS: usize = 20;
pub const DEFAULT_DELTAS: [f64; 3] = [1e-2, 1e-3, 1e-4];
pub const DEFAULT_EQUIVALENCE_TOL: f64 = 1e-6;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Forward,
    Inverse,
    Roundtrip,
    Probe,
}

impl Mode {
    pub fn name(self) -> &'static str {
        match self {
            Mode::Forward => "forward",
            Mode::Inverse => "inverse",
            Mode::Roundtrip => "roundtrip",
            Mode::Probe => "probe",
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AnnulusSpec {
    pub a: Option<f64>,
    pub b: Option<f64>,
}

#[derive(Debug, Clone, Default, PartialEq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SolverSpec {
    pub tolerance: Option<f64>,
    pub rank_tol: Option<f64>,
    pub lambda_min: Option<f64>,
    pub lambda_max: Option<f64>,
    pub scan_step: Option<f64>,
    pub equivalence_tol: Option<f64>,
}

#[derive(Debug, Clone, Default, PartialEq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProbeSpec {
    pub deltas: Option<Vec<f64>>,
    pub trials: Option<usize>,
    pub seed: Option<u64>,
}

/// Everything a run may specify. All fields are optional here; [`validate`]
/// checks what each mode needs.
///
/// [`validate`]: RunDescriptor::validate
#[derive(Debug, Clone, Default, PartialEq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RunDescriptor {
    pub schema_version: Option<u32>,
    pub mode: Option<Mode>,
    #[serde(default)]
    pub annulus: AnnulusSpec,
    /// Full 2×4 boundary matrix.
    pub matrix: Option<Matrix2x4>,
    /// Separated shorthand `(k1, k2, k3, k4)`.
    pub separated: Option<[f64; 4]>,
    pub lambdas: Option<Vec<f64>>,
    pub count: Option<usize>,
    #[serde(default)]
    pub solver: SolverSpec,
    #[serde(default)]
    pub probe: ProbeSpec,
    pub output: Option<PathBuf>,
}

impl RunDescriptor {
    pub fn from_json_str(text: &str) -> Result<Self, CliError> {
        let descriptor: Self = serde_json::from_str(text)
            .map_err(|e| CliError::Validation(format!("descriptor: {e}")))?;
        if let Some(v) = descriptor.schema_version {
            if v != super::SCHEMA_VERSION {
                return Err(CliError::Validation(format!(
                    "descriptor: unsupported schema_version {v}, expected {}",
                    super::SCHEMA_VERSION
                )));
            }
        }
        Ok(descriptor)
    }

    /// Checks the fields `mode` needs and builds the run.
    pub fn validate(&self, mode: Mode) -> Result<Run, CliError> {
        if let Some(declared) = self.mode {
            if declared != mode {
                return Err(CliError::Validation(format!(
                    "descriptor declares mode '{}' but '{}' was requested",
                    declared.name(),
                    mode.name()
                )));
            }
        }
        let annulus = self.annulus()?;
        let rank_tol = positive("rank_tol", self.solver.rank_tol.unwrap_or(DEFAULT_RANK_TOL))?;
        match mode {
            Mode::Forward => Ok(Run::Forward {
                annulus,
                bc: self.boundary_conditions()?,
                count: self.count.unwrap_or(DEFAULT_COUNT),
                search: self.search(&annulus)?,
            }),
            Mode::Inverse => Ok(Run::Inverse { annulus, lambdas: self.lambda_triple()?, rank_tol }),
            Mode::Roundtrip => Ok(Run::Roundtrip {
                annulus,
                bc: self.boundary_conditions()?,
                search: self.search(&annulus)?,
                rank_tol,
                equivalence_tol: positive(
                    "equivalence_tol",
                    self.solver.equivalence_tol.unwrap_or(DEFAULT_EQUIVALENCE_TOL),
                )?,
            }),
            Mode::Probe => {
                let bc = self.boundary_conditions()?;
                if !bc.is_separated(1e-12) {
                    return Err(CliError::Validation(
                        "probe needs separated boundary conditions (A12 = A34 = 0)".into(),
                    ));
                }
                let seed = self
                    .probe
                    .seed
                    .ok_or_else(|| CliError::Validation("probe requires a seed".into()))?;
                let deltas = self.probe.deltas.clone().unwrap_or_else(|| DEFAULT_DELTAS.to_vec());
                if deltas.is_empty() || deltas.iter().any(|d| !(d.is_finite() && *d >= 0.0)) {
                    return Err(CliError::Validation(format!(
                        "probe deltas must be a non-empty list of finite values >= 0, got {deltas:?}"
                    )));
                }
                let trials = self.probe.trials.unwrap_or(DEFAULT_TRIALS);
                if trials == 0 {
                    return Err(CliError::Validation("probe trials must be positive".into()));
                }
                Ok(Run::Probe {
                    annulus,
                    bc,
                    deltas,
                    trials,
                    seed,
                    search: self.search(&annulus)?,
                    rank_tol,
                })
            }
        }
    }

    fn annulus(&self) -> Result<Annulus, CliError> {
        let (Some(a), Some(b)) = (self.annulus.a, self.annulus.b) else {
            return Err(CliError::Validation("annulus radii a and b are required".into()));
        };
        Annulus::new(a, b).map_err(|e| CliError::Validation(e.to_string()))
    }

    fn boundary_conditions(&self) -> Result<BoundaryConditions, CliError> {
        let result = match (self.matrix, self.separated) {
            (Some(_), Some(_)) => {
                return Err(CliError::Validation(
                    "give either matrix or separated, not both".into(),
                ))
            }
            (Some(rows), None) => BoundaryConditions::new(rows),
            (None, Some([k1, k2, k3, k4])) => BoundaryConditions::separated(k1, k2, k3, k4),
            (None, None) => {
                return Err(CliError::Validation("a boundary matrix is required".into()))
            }
        };
        result.map_err(|e| CliError::Validation(format!("boundary matrix: {e}")))
    }

    fn lambda_triple(&self) -> Result<[f64; 3], CliError> {
        let lambdas = self
            .lambdas
            .as_deref()
            .ok_or_else(|| CliError::Validation("inverse mode requires three eigenvalues".into()))?;
        let triple: [f64; 3] = lambdas.try_into().map_err(|_| {
            CliError::Validation(format!(
                "inverse mode requires exactly three eigenvalues, got {}",
                lambdas.len()
            ))
        })?;
        let ordered = triple.iter().all(|l| l.is_finite() && *l > 0.0)
            && triple[0] < triple[1]
            && triple[1] < triple[2];
        if !ordered {
            return Err(CliError::Validation(format!(
                "eigenvalues must be positive and strictly increasing, got {triple:?}"
            )));
        }
        Ok(triple)
    }

    fn search(&self, annulus: &Annulus) -> Result<SearchConfig, CliError> {
        let defaults = SearchConfig::for_annulus(annulus);
        let s = &self.solver;
        let config = SearchConfig {
            lambda_min: s.lambda_min.unwrap_or(defaults.lambda_min),
            lambda_max: s.lambda_max.unwrap_or(defaults.lambda_max),
            scan_step: s.scan_step.unwrap_or(defaults.scan_step),
            root_tolerance: s.tolerance.unwrap_or(defaults.root_tolerance),
            max_roots: defaults.max_roots,
        };
        config.validate().map_err(|e| CliError::Validation(e.to_string()))?;
        if let Some(count) = self.count {
            if count > config.max_roots {
                return Err(CliError::Validation(format!(
                    "count {count} exceeds the limit of {}",
                    config.max_roots
                )));
            }
        }
        Ok(config)
    }
}

fn positive(name: &str, value: f64) -> Result<f64, CliError> {
    if value.is_finite() && value > 0.0 {
        Ok(value)
    } else {
        Err(CliError::Validation(format!("{name} must be positive, got {value}")))
    }
}

/// Parses the separated shorthand `"k1,k2,k3,k4"`.
pub fn parse_separated_matrix(text: &str) -> Result<[f64; 4], CliError> {
    let values = text
        .split(',')
        .map(|part| {
            let part = part.trim();
            part.parse::<f64>()
                .ok()
                .filter(|v| v.is_finite())
                .ok_or_else(|| CliError::Validation(format!("matrix: invalid coefficient '{part}'")))
        })
        .collect::<Result<Vec<_>, _>>()?;
    values.try_into().map_err(|v: Vec<f64>| {
        CliError::Validation(format!("matrix: expected 4 coefficients k1,k2,k3,k4, got {}", v.len()))
    })
}

/// A validated run.
#[derive(Debug, Clone, PartialEq)]
pub enum Run {
    Forward {
        annulus: Annulus,
        bc: BoundaryConditions,
        count: usize,
        search: SearchConfig,
    },
    Inverse {
        annulus: Annulus,
        lambdas: [f64; 3],
        rank_tol: f64,
    },
    Roundtrip {
        annulus: Annulus,
        bc: BoundaryConditions,
        search: SearchConfig,
        rank_tol: f64,
        equivalence_tol: f64,
    },
    Probe {
        annulus: Annulus,
        bc: BoundaryConditions,
        deltas: Vec<f64>,
        trials: usize,
        seed: u64,
        search: SearchConfig,
        rank_tol: f64,
    },
}
