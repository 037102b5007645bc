//! Serialized run reports. Every report carries `schema_version`.

use serde::Serialize;

use crate::inverse::{IdentificationResult, ProbeRow};
use crate::spectral::Matrix2x4;

pub const MINOR_LABELS: [&str; 6] = ["A12", "A13", "A14", "A23", "A24", "A34"];

#[derive(Debug, Clone, Serialize)]
pub struct AnnulusReport {
    pub a: f64,
    pub b: f64,
}

#[derive(Debug, Clone, Serialize)]
pub struct RootReport {
    pub lambda: f64,
    /// `|Δ(λ)|`
    pub residual: f64,
    /// `|Δ(λ)|` divided by the largest `|Δ|` over the bracketing scan cell.
    pub relative_residual: f64,
}

#[derive(Debug, Clone, Serialize)]
pub struct ForwardReport {
    pub schema_version: u32,
    pub mode: &'static str,
    pub annulus: AnnulusReport,
    pub matrix: Matrix2x4,
    pub count: usize,
    pub eigenvalues: Vec<f64>,
    pub roots: Vec<RootReport>,
}

#[derive(Debug, Clone, Serialize)]
pub struct IdentificationReport {
    pub lambdas: [f64; 3],
    /// `(A°13, A°14, A°23, A°24)`, unit norm.
    pub raw_solution: [f64; 4],
    pub minor_labels: [&'static str; 6],
    pub projected_minors: [f64; 6],
    pub matrix: Matrix2x4,
    pub singular_values: [f64; 3],
    pub rank_ok: bool,
    pub projection_shift: f64,
    pub quadric_residual: f64,
    pub determinant_residuals: [f64; 3],
}

impl From<&IdentificationResult> for IdentificationReport {
    fn from(r: &IdentificationResult) -> Self {
        Self {
            lambdas: r.lambdas,
            raw_solution: r.raw_solution,
            minor_labels: MINOR_LABELS,
            projected_minors: r.projected.minors(),
            matrix: *r.matrix.rows(),
            singular_values: r.singular_values,
            rank_ok: r.rank_ok,
            projection_shift: r.projection_shift,
            quadric_residual: r.quadric_residual,
            determinant_residuals: r.determinant_residuals,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct InverseReport {
    pub schema_version: u32,
    pub mode: &'static str,
    pub annulus: AnnulusReport,
    pub identification: IdentificationReport,
}

#[derive(Debug, Clone, Serialize)]
pub struct RoundtripReport {
    pub schema_version: u32,
    pub mode: &'static str,
    pub annulus: AnnulusReport,
    pub matrix: Matrix2x4,
    pub true_minors: [f64; 6],
    pub eigenvalues: [f64; 3],
    pub identification: IdentificationReport,
    pub plucker_distance: f64,
    pub equivalence_tol: f64,
    pub equivalent: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct ProbeRowReport {
    pub delta: f64,
    pub mean_error: Option<f64>,
    pub max_error: Option<f64>,
    pub failures: usize,
}

impl From<&ProbeRow> for ProbeRowReport {
    fn from(r: &ProbeRow) -> Self {
        Self { delta: r.delta, mean_error: r.mean_error, max_error: r.max_error, failures: r.failures }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct ProbeReport {
    pub schema_version: u32,
    pub mode: &'static str,
    pub annulus: AnnulusReport,
    pub matrix: Matrix2x4,
    pub seed: u64,
    pub trials: usize,
    pub rows: Vec<ProbeRowReport>,
}

#[derive(Debug, Clone, Serialize)]
#[serde(untagged)]
pub enum Report {
    Forward(ForwardReport),
    Inverse(InverseReport),
    Roundtrip(RoundtripReport),
    Probe(ProbeReport),
}

impl Report {
    pub fn to_json(&self) -> String {
        super::json::to_string(self)
    }

    /// Short human-readable digest for the error stream.
    pub fn summary(&self) -> String {
        match self {
            Report::Forward(r) => format!("forward: {} eigenvalue(s) {:?}", r.eigenvalues.len(), r.eigenvalues),
            Report::Inverse(r) => format!(
                "inverse: matrix {:?}, sigma {:?}, projection shift {:.3e}",
                r.identification.matrix, r.identification.singular_values, r.identification.projection_shift
            ),
            Report::Roundtrip(r) => format!(
                "roundtrip: {} (Plücker distance {:.3e}, tol {:.1e})",
                if r.equivalent { "PASS" } else { "FAIL" },
                r.plucker_distance,
                r.equivalence_tol
            ),
            Report::Probe(r) => {
                let mut s = format!("probe: seed {}, {} trials\n  delta        mean         max          failures", r.seed, r.trials);
                for row in &r.rows {
                    let fmt = |v: Option<f64>| v.map_or("-".to_string(), |v| format!("{v:.3e}"));
                    s.push_str(&format!(
                        "\n  {:<12.3e} {:<12} {:<12} {}",
                        row.delta,
                        fmt(row.mean_error),
                        fmt(row.max_error),
                        row.failures
                    ));
                }
                s
            }
        }
    }
}
