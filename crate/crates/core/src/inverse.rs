//! Boundary-condition identification from three eigenvalues.
//!
//! For separated conditions `A12 = A34 = 0`, so `Δ(λ) = 0` at each of three
//! eigenvalues gives three homogeneous equations
//! `F · (A13, A14, A23, A24)ᵀ = 0` with row `i` of `F` equal to
//! `(B13, B14, B23, B24)(λi)`. When `F` has rank 3 its null direction fixes
//! the minors up to scale. Measured eigenvalues carry noise, so the null
//! vector is projected onto the Plücker quadric before the boundary matrix is
//! rebuilt from it.

use nalgebra::Matrix4;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::forward::{find_eigenvalues, SearchConfig};
use crate::plucker::{
    minors_of, normalize, plucker_residual, project_to_quadric, reconstruct_matrix, PluckerVector,
};
use crate::spectral::{
    basis_minors, characteristic_determinant, Annulus, BoundaryConditions, MINOR_PAIRS,
};

pub const DEFAULT_RANK_TOL: f64 = 1e-8;

/// Columns of the frequency matrix, as indices into [`MINOR_PAIRS`]:
/// `B13, B14, B23, B24`.
const SEPARATED_COLUMNS: [usize; 4] = [1, 2, 3, 4];

/// The 3×4 system `F Z = 0`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FrequencySystem {
    pub matrix: [[f64; 4]; 3],
    pub lambdas: [f64; 3],
}

pub fn frequency_matrix(annulus: &Annulus, lambdas: [f64; 3]) -> Result<FrequencySystem> {
    let ordered = lambdas.iter().all(|l| l.is_finite() && *l > 0.0)
        && lambdas[0] < lambdas[1]
        && lambdas[1] < lambdas[2];
    if !ordered {
        return Err(Error::Ordering(lambdas.to_vec()));
    }
    let mut matrix = [[0.0; 4]; 3];
    for (row, &lambda) in matrix.iter_mut().zip(&lambdas) {
        let b = basis_minors(annulus, lambda)?;
        *row = SEPARATED_COLUMNS.map(|k| b[k]);
    }
    debug_assert_eq!(SEPARATED_COLUMNS.map(|k| MINOR_PAIRS[k]), [(1, 3), (1, 4), (2, 3), (2, 4)]);
    Ok(FrequencySystem { matrix, lambdas })
}

/// Null direction of `F` with its singular values.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NullSpaceSolution {
    /// `(A13, A14, A23, A24)`, unit norm, largest entry positive.
    pub vector: [f64; 4],
    /// `σ1 >= σ2 >= σ3`
    pub singular_values: [f64; 3],
    pub rank_ok: bool,
}

/// Right singular vector of the smallest singular value of `F`.
///
/// `F` is padded with a zero row to 4×4 so the decomposition yields the full
/// right basis; the padding adds one zero singular value whose vector spans
/// the null space of `F`.
pub fn null_space_solution(system: &FrequencySystem, rank_tol: f64) -> Result<NullSpaceSolution> {
    let f = &system.matrix;
    if f.iter().flatten().any(|v| !v.is_finite()) {
        return Err(Error::NonFinite("frequency matrix"));
    }
    let padded = Matrix4::from_fn(|r, c| if r < 3 { f[r][c] } else { 0.0 });
    let svd = padded.svd(false, true);
    let v_t = svd.v_t.expect("requested right singular vectors");

    let mut order = [0usize, 1, 2, 3];
    order.sort_by(|&i, &j| svd.singular_values[j].total_cmp(&svd.singular_values[i]));
    let singular_values = [
        svd.singular_values[order[0]],
        svd.singular_values[order[1]],
        svd.singular_values[order[2]],
    ];
    let rank_ok = singular_values[0] > 0.0 && singular_values[2] >= rank_tol * singular_values[0];
    if !rank_ok {
        return Err(Error::RankDeficientSystem { singular_values, rank_tol });
    }
    let row = v_t.row(order[3]);
    let vector = normalize([row[0], row[1], row[2], row[3]]);
    Ok(NullSpaceSolution { vector, singular_values, rank_ok })
}

/// Every stage of the identification pipeline.
#[derive(Debug, Clone, PartialEq)]
pub struct IdentificationResult {
    pub lambdas: [f64; 3],
    /// Null vector `(A°13, A°14, A°23, A°24)` before projection.
    pub raw_solution: [f64; 4],
    /// Projected minors, canonical form.
    pub projected: PluckerVector,
    pub matrix: BoundaryConditions,
    pub singular_values: [f64; 3],
    pub rank_ok: bool,
    /// `‖Z° - Z‖ / ‖Z°‖` for the projection step.
    pub projection_shift: f64,
    /// Relative Plücker residual of the projected minors.
    pub quadric_residual: f64,
    /// `|Δ(λi)|` of the recovered matrix at each input eigenvalue.
    pub determinant_residuals: [f64; 3],
}

pub fn identify_boundary_conditions(
    annulus: &Annulus,
    lambdas: [f64; 3],
    rank_tol: f64,
) -> Result<IdentificationResult> {
    let system = frequency_matrix(annulus, lambdas)?;
    let null = null_space_solution(&system, rank_tol)?;

    let raw = PluckerVector::separated(null.vector)?;
    let projected = project_to_quadric(&raw)?;
    let projection_shift = {
        let x = projected.separated_part();
        let d: f64 = x.iter().zip(&null.vector).map(|(a, b)| (a - b).powi(2)).sum();
        d.sqrt()
    };
    let matrix = reconstruct_matrix(&projected)?;
    let canonical = projected.normalized();

    let mut determinant_residuals = [0.0; 3];
    for (r, &l) in determinant_residuals.iter_mut().zip(&lambdas) {
        *r = characteristic_determinant(&matrix, annulus, l)?.abs();
    }
    Ok(IdentificationResult {
        lambdas,
        raw_solution: null.vector,
        projected: canonical,
        matrix,
        singular_values: null.singular_values,
        rank_ok: null.rank_ok,
        projection_shift,
        quadric_residual: plucker_residual(&canonical).relative,
        determinant_residuals,
    })
}

/// Aggregated identification error at one noise level.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ProbeRow {
    pub delta: f64,
    /// Mean Plücker distance over successful trials; `None` if all failed.
    pub mean_error: Option<f64>,
    pub max_error: Option<f64>,
    pub failures: usize,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ProbeSettings {
    pub trials: usize,
    pub seed: u64,
    pub rank_tol: f64,
}

/// Perturbs the first three eigenvalues of `bc` by uniform noise in
/// `[-δ, δ]` and measures how far the identified boundary conditions move.
///
/// Trial `t` draws from ChaCha8 stream `t` of `seed`, so results depend only
/// on the inputs and not on evaluation order.
pub fn stability_probe(
    annulus: &Annulus,
    bc: &BoundaryConditions,
    deltas: &[f64],
    settings: &ProbeSettings,
    search: &SearchConfig,
) -> Result<Vec<ProbeRow>> {
    if !bc.is_separated(1e-12) {
        return Err(Error::Unsupported(
            "stability probe needs separated conditions (A12 = A34 = 0)".into(),
        ));
    }
    if deltas.iter().any(|d| !(d.is_finite() && *d >= 0.0)) {
        return Err(Error::Domain(format!("noise levels must be finite and >= 0: {deltas:?}")));
    }
    let truth = minors_of(bc)?;
    let spectrum = find_eigenvalues(bc, annulus, 3, search)?;
    let exact: [f64; 3] = spectrum.as_slice().try_into().expect("three eigenvalues");

    let rows = deltas
        .iter()
        .map(|&delta| {
            let mut errors = Vec::with_capacity(settings.trials);
            let mut failures = 0;
            for trial in 0..settings.trials {
                let mut rng = ChaCha8Rng::seed_from_u64(settings.seed);
                rng.set_stream(trial as u64);
                let noisy = exact.map(|l| {
                    if delta > 0.0 {
                        l + rng.random_range(-delta..=delta)
                    } else {
                        l
                    }
                });
                match identify_boundary_conditions(annulus, noisy, settings.rank_tol) {
                    Ok(result) => errors.push(result.projected.distance(&truth)),
                    Err(_) => failures += 1,
                }
            }
            let max_error = errors.iter().copied().reduce(f64::max);
            let mean_error = (!errors.is_empty())
                .then(|| errors.iter().sum::<f64>() / errors.len() as f64);
            ProbeRow { delta, mean_error, max_error, failures }
        })
        .collect();
    Ok(rows)
}
