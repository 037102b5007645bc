//! Boundary-condition data model and the characteristic determinant.
//!
//! Radial vibrations of an annular membrane `a <= r <= b` satisfy
//! `y'' + y'/r + λ² y = 0`, whose general solution is
//! `C1 J0(λr) + C2 Y0(λr)`. Two boundary forms `U1, U2` are written as
//! `A · X(y)ᵀ` with `X(y) = (y'(a), y(a), y'(b), y(b))` and `A` a real 2×4
//! matrix. The eigenvalues are the positive zeros of
//! `Δ(λ) = det(A · B(λ)ᵀ)`, where the rows of `B(λ)` are `X(J0(λ·))` and
//! `X(Y0(λ·))`.

use crate::bessel::{j0, j1, y0, y1};
use crate::error::{Error, Result};

/// A dense 2×4 matrix stored row-major.
pub type Matrix2x4 = [[f64; 4]; 2];

/// Column pairs `(i, j)`, 1-based, in lexicographic order. This is the
/// storage order of every 6-tuple of minors in this crate.
pub const MINOR_PAIRS: [(usize, usize); 6] = [(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)];

/// Smallest admissible ratio of singular values for a rank-2 matrix.
pub const RANK_TOLERANCE: f64 = 1e-10;

/// The six 2×2 column minors of a 2×4 matrix, ordered as [`MINOR_PAIRS`].
pub fn minors(m: &Matrix2x4) -> [f64; 6] {
    MINOR_PAIRS.map(|(i, j)| minor(m, i, j))
}

fn minor(m: &Matrix2x4, i: usize, j: usize) -> f64 {
    let (i, j) = (i - 1, j - 1);
    m[0][i] * m[1][j] - m[0][j] * m[1][i]
}

fn check_pair(i: usize, j: usize) -> Result<()> {
    if 1 <= i && i < j && j <= 4 {
        Ok(())
    } else {
        Err(Error::Index { i, j })
    }
}

/// Ratio `σ_min / σ_max` of the singular values of a 2×4 matrix.
///
/// Uses `σ1² σ2² = det(M Mᵀ) = Σ minors²` so the small singular value is
/// computed without cancellation.
pub fn singular_value_ratio(m: &Matrix2x4) -> f64 {
    let r0: f64 = m[0].iter().map(|v| v * v).sum();
    let r1: f64 = m[1].iter().map(|v| v * v).sum();
    let det: f64 = minors(m).iter().map(|v| v * v).sum();
    let trace = r0 + r1;
    if trace == 0.0 {
        return 0.0;
    }
    let disc = ((r0 - r1).powi(2) + 4.0 * dot4(&m[0], &m[1]).powi(2)).sqrt();
    let big = 0.5 * (trace + disc);
    let small = det / big;
    (small / big).sqrt()
}

fn dot4(u: &[f64; 4], v: &[f64; 4]) -> f64 {
    u.iter().zip(v).map(|(a, b)| a * b).sum()
}

/// Inner radius `a` and outer radius `b` of the membrane.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Annulus {
    inner: f64,
    outer: f64,
}

impl Annulus {
    pub fn new(inner: f64, outer: f64) -> Result<Self> {
        if inner.is_finite() && outer.is_finite() && 0.0 < inner && inner < outer {
            Ok(Self { inner, outer })
        } else {
            Err(Error::InvalidAnnulus { inner, outer })
        }
    }

    pub fn inner(&self) -> f64 {
        self.inner
    }

    pub fn outer(&self) -> f64 {
        self.outer
    }

    pub fn width(&self) -> f64 {
        self.outer - self.inner
    }
}

/// Values `(y'(a), y(a), y'(b), y(b))` a boundary form acts on.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EvaluationVector(pub [f64; 4]);

impl EvaluationVector {
    pub fn new(values: [f64; 4]) -> Result<Self> {
        if values.iter().all(|v| v.is_finite()) {
            Ok(Self(values))
        } else {
            Err(Error::NonFinite("evaluation vector"))
        }
    }

    /// `X(y)` for `y(r) = J0(λr)`.
    pub fn of_j0(annulus: &Annulus, lambda: f64) -> Self {
        let (a, b) = (annulus.inner, annulus.outer);
        Self([
            -lambda * j1(lambda * a),
            j0(lambda * a),
            -lambda * j1(lambda * b),
            j0(lambda * b),
        ])
    }

    /// `X(y)` for `y(r) = Y0(λr)`.
    pub fn of_y0(annulus: &Annulus, lambda: f64) -> Self {
        let (a, b) = (annulus.inner, annulus.outer);
        Self([
            -lambda * y1(lambda * a),
            y0(lambda * a),
            -lambda * y1(lambda * b),
            y0(lambda * b),
        ])
    }
}

/// The 2×4 boundary matrix `A` with `(U1, U2)ᵀ = A · X(y)ᵀ`.
///
/// Construction checks that every entry is finite and that `A` has rank 2
/// (smallest singular value at least [`RANK_TOLERANCE`] times the largest).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoundaryConditions {
    rows: Matrix2x4,
}

impl BoundaryConditions {
    pub fn new(rows: Matrix2x4) -> Result<Self> {
        if rows.iter().flatten().any(|v| !v.is_finite()) {
            return Err(Error::NonFinite("boundary matrix"));
        }
        let ratio = singular_value_ratio(&rows);
        if !(ratio >= RANK_TOLERANCE) {
            return Err(Error::RankDeficientBoundary { ratio });
        }
        Ok(Self { rows })
    }

    /// Separated conditions `k1 y'(a) - k2 y(a) = 0`, `k3 y'(b) + k4 y(b) = 0`,
    /// i.e. `A = [[k1, -k2, 0, 0], [0, 0, k3, k4]]`.
    pub fn separated(k1: f64, k2: f64, k3: f64, k4: f64) -> Result<Self> {
        Self::new([[k1, -k2, 0.0, 0.0], [0.0, 0.0, k3, k4]])
    }

    /// Skips the rank and finiteness checks. Intended for tests that need a
    /// degenerate matrix.
    pub fn new_unchecked(rows: Matrix2x4) -> Self {
        Self { rows }
    }

    pub fn rows(&self) -> &Matrix2x4 {
        &self.rows
    }

    /// Minor `A_ij` of columns `i < j` (1-based).
    pub fn minor(&self, i: usize, j: usize) -> Result<f64> {
        check_pair(i, j)?;
        Ok(minor(&self.rows, i, j))
    }

    pub fn minors(&self) -> [f64; 6] {
        minors(&self.rows)
    }

    /// `A12 = A34 = 0` to within `tol` relative to the largest minor.
    pub fn is_separated(&self, tol: f64) -> bool {
        let m = self.minors();
        let scale = m.iter().fold(0.0_f64, |acc, v| acc.max(v.abs()));
        m[0].abs() <= tol * scale && m[5].abs() <= tol * scale
    }

    /// `(U1(y), U2(y))` for the given evaluation vector.
    pub fn apply(&self, x: &EvaluationVector) -> [f64; 2] {
        [dot4(&self.rows[0], &x.0), dot4(&self.rows[1], &x.0)]
    }

    /// Left-multiplies by a 2×2 matrix `S`, producing the equivalent `S · A`.
    pub fn transformed(&self, s: [[f64; 2]; 2]) -> Result<Self> {
        let mut rows = [[0.0; 4]; 2];
        for (r, out) in rows.iter_mut().enumerate() {
            for (c, v) in out.iter_mut().enumerate() {
                *v = s[r][0] * self.rows[0][c] + s[r][1] * self.rows[1][c];
            }
        }
        Self::new(rows)
    }
}

/// Ordered positive eigenvalues `λ1 < λ2 < ...`.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct Spectrum(Vec<f64>);

impl Spectrum {
    pub fn new(eigenvalues: Vec<f64>) -> Result<Self> {
        if eigenvalues.iter().any(|v| !(v.is_finite() && *v > 0.0)) {
            return Err(Error::InvalidSpectrum(format!(
                "eigenvalues must be finite and positive: {eigenvalues:?}"
            )));
        }
        if eigenvalues.windows(2).any(|w| !(w[0] < w[1])) {
            return Err(Error::InvalidSpectrum(format!(
                "eigenvalues must be strictly increasing: {eigenvalues:?}"
            )));
        }
        Ok(Self(eigenvalues))
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn into_vec(self) -> Vec<f64> {
        self.0
    }
}

fn check_lambda(lambda: f64) -> Result<()> {
    if lambda > 0.0 && lambda.is_finite() {
        Ok(())
    } else {
        Err(Error::Domain(format!("spectral parameter must be positive, got {lambda}")))
    }
}

/// `B(λ)`: row 1 is `X(J0(λ·))`, row 2 is `X(Y0(λ·))`.
pub fn basis_matrix(annulus: &Annulus, lambda: f64) -> Result<Matrix2x4> {
    check_lambda(lambda)?;
    Ok(basis_rows(annulus, lambda))
}

fn basis_rows(annulus: &Annulus, lambda: f64) -> Matrix2x4 {
    [
        EvaluationVector::of_j0(annulus, lambda).0,
        EvaluationVector::of_y0(annulus, lambda).0,
    ]
}

/// `B_ij(λ)`, the minor of columns `i < j` (1-based) of [`basis_matrix`].
pub fn basis_minor(annulus: &Annulus, lambda: f64, i: usize, j: usize) -> Result<f64> {
    check_pair(i, j)?;
    check_lambda(lambda)?;
    Ok(minor(&basis_rows(annulus, lambda), i, j))
}

/// All six `B_ij(λ)` in [`MINOR_PAIRS`] order.
pub fn basis_minors(annulus: &Annulus, lambda: f64) -> Result<[f64; 6]> {
    check_lambda(lambda)?;
    Ok(minors(&basis_rows(annulus, lambda)))
}

/// `Δ(λ) = det(A · B(λ)ᵀ)`: the boundary forms applied to `J0(λr)` and
/// `Y0(λr)`.
pub fn characteristic_determinant(
    bc: &BoundaryConditions,
    annulus: &Annulus,
    lambda: f64,
) -> Result<f64> {
    check_lambda(lambda)?;
    Ok(determinant_unchecked(bc, annulus, lambda))
}

pub(crate) fn determinant_unchecked(bc: &BoundaryConditions, annulus: &Annulus, lambda: f64) -> f64 {
    let [u_j, v_j] = bc.apply(&EvaluationVector::of_j0(annulus, lambda));
    let [u_y, v_y] = bc.apply(&EvaluationVector::of_y0(annulus, lambda));
    u_j * v_y - u_y * v_j
}

/// `Σ_{i<j} A_ij B_ij(λ)`, the Binet–Cauchy expansion of `Δ(λ)`.
pub fn binet_cauchy_sum(bc: &BoundaryConditions, annulus: &Annulus, lambda: f64) -> Result<f64> {
    let b = basis_minors(annulus, lambda)?;
    Ok(bc.minors().iter().zip(&b).map(|(a, b)| a * b).sum())
}
