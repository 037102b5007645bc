//! Plücker coordinates of boundary matrices.
//!
//! Two 2×4 matrices describe the same boundary conditions exactly when their
//! six 2×2 column minors are proportional. A 6-tuple is the set of minors of
//! some matrix iff it lies on the quadric `A12 A34 - A13 A24 + A14 A23 = 0`.
//! Written in the coordinates
//!
//! ```text
//! x1 = A12, x2 = A34, x3 = A13, x4 = -A24, x5 = A14, x6 = A23
//! ```
//!
//! the quadric is `x1 x2 + x3 x4 + x5 x6 = 0`, i.e. `(X, X*) = 0` with
//! `X* = (x2, x1, x4, x3, x6, x5)`. Its normal at `X` is `X*`, so the
//! orthogonal projection `X` of a point `Y` satisfies `Y = X + p X*`.

use crate::error::{Error, Result};
use crate::spectral::{BoundaryConditions, Matrix2x4};

/// Relative residual accepted as "on the quadric" by [`reconstruct_matrix`].
pub const QUADRIC_TOLERANCE: f64 = 1e-9;

/// Below this `|(Y, Y*)| / (Y, Y)` a point is treated as already projected.
const ON_SURFACE_TOLERANCE: f64 = 1e-14;

/// Smallest admissible `1 - p²` in the projection formula.
const SINGULAR_GAP: f64 = 1e-12;

/// Six minors `(A12, A13, A14, A23, A24, A34)`, defined up to a common
/// nonzero factor.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PluckerVector {
    minors: [f64; 6],
}

impl PluckerVector {
    /// Wraps six minors as given; rejects all-zero or non-finite input.
    pub fn new(minors: [f64; 6]) -> Result<Self> {
        if minors.iter().any(|v| !v.is_finite()) {
            return Err(Error::NonFinite("Plücker coordinates"));
        }
        if minors.iter().all(|&v| v == 0.0) {
            return Err(Error::DegeneratePlucker);
        }
        Ok(Self { minors })
    }

    /// Builds from the quadric coordinates `x1..x6`.
    pub fn from_x(x: [f64; 6]) -> Result<Self> {
        Self::new([x[0], x[2], x[4], x[5], -x[3], x[1]])
    }

    /// Separated conditions: `A12 = A34 = 0` and `(A13, A14, A23, A24)`.
    pub fn separated(z: [f64; 4]) -> Result<Self> {
        Self::new([0.0, z[0], z[1], z[2], z[3], 0.0])
    }

    pub fn minors(&self) -> [f64; 6] {
        self.minors
    }

    /// `(x1, ..., x6) = (A12, A34, A13, -A24, A14, A23)`.
    pub fn x(&self) -> [f64; 6] {
        let m = self.minors;
        [m[0], m[5], m[1], -m[4], m[2], m[3]]
    }

    /// `(A13, A14, A23, A24)`.
    pub fn separated_part(&self) -> [f64; 4] {
        let m = self.minors;
        [m[1], m[2], m[3], m[4]]
    }

    pub fn norm(&self) -> f64 {
        self.minors.iter().map(|v| v * v).sum::<f64>().sqrt()
    }

    /// Canonical representative: unit Euclidean norm, largest-magnitude
    /// entry positive (earliest index wins ties).
    pub fn normalized(&self) -> Self {
        Self { minors: normalize(self.minors) }
    }

    pub fn scaled(&self, c: f64) -> Result<Self> {
        Self::new(self.minors.map(|v| v * c))
    }

    /// Euclidean distance between canonical representatives, minimized over
    /// the sign of one of them.
    pub fn distance(&self, other: &Self) -> f64 {
        let p = self.normalized().minors;
        let q = other.normalized().minors;
        let minus: f64 = p.iter().zip(&q).map(|(a, b)| (a - b).powi(2)).sum();
        let plus: f64 = p.iter().zip(&q).map(|(a, b)| (a + b).powi(2)).sum();
        minus.min(plus).sqrt()
    }
}

/// Scales to unit norm and fixes the sign of the largest-magnitude entry.
pub fn normalize<const N: usize>(v: [f64; N]) -> [f64; N] {
    let norm = v.iter().map(|x| x * x).sum::<f64>().sqrt();
    if norm == 0.0 {
        return v;
    }
    let mut pivot = 0;
    for (k, x) in v.iter().enumerate() {
        if x.abs() > v[pivot].abs() {
            pivot = k;
        }
    }
    let s = if v[pivot] < 0.0 { -1.0 / norm } else { 1.0 / norm };
    // `+ 0.0` turns -0.0 into 0.0
    v.map(|x| x * s + 0.0)
}

/// Value of the Plücker relation and its scale-free version.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadricResidual {
    pub value: f64,
    /// `value / ‖v‖²`
    pub relative: f64,
}

/// Normalized minors of a rank-2 boundary matrix.
pub fn minors_of(bc: &BoundaryConditions) -> Result<PluckerVector> {
    Ok(PluckerVector::new(bc.minors())?.normalized())
}

/// `x1 x2 + x3 x4 + x5 x6 = A12 A34 - A13 A24 + A14 A23`.
pub fn plucker_residual(v: &PluckerVector) -> QuadricResidual {
    let x = v.x();
    let value = x[0] * x[1] + x[2] * x[3] + x[4] * x[5];
    let sq: f64 = x.iter().map(|v| v * v).sum();
    QuadricResidual { value, relative: value / sq }
}

fn inner(u: &[f64; 6], v: &[f64; 6]) -> f64 {
    u.iter().zip(v).map(|(a, b)| a * b).sum()
}

fn star(x: &[f64; 6]) -> [f64; 6] {
    [x[1], x[0], x[3], x[2], x[5], x[4]]
}

/// Orthogonal projection onto the Plücker quadric.
///
/// Solves `Y = X + p X*` for `X = (Y - p Y*) / (1 - p²)` with
/// `p = (Y,Y*) / ((Y,Y) + sqrt((Y,Y)² - (Y,Y*)²))`, the root of
/// `c p² - 2 s p + c = 0` nearest zero, evaluated through `1 ∓ p` so that
/// `1 - p²` stays accurate near the singular case. Points already on the quadric are
/// returned unchanged. The result keeps the scale of the input.
pub fn project_to_quadric(v: &PluckerVector) -> Result<PluckerVector> {
    let y = v.x();
    let y_star = star(&y);
    let s = inner(&y, &y);
    let c = inner(&y, &y_star);
    if !(s.is_finite() && c.is_finite()) {
        return Err(Error::NonFinite("Plücker inner products"));
    }
    debug_assert!(c.abs() <= s * (1.0 + 4.0 * f64::EPSILON), "Cauchy–Schwarz violated");
    if c.abs() <= ON_SURFACE_TOLERANCE * s {
        return Ok(*v);
    }
    // s ∓ c = ½‖Y ∓ Y*‖², so the square root and 1 ∓ p are formed without
    // cancellation even when |c| is close to s.
    let u: [f64; 6] = std::array::from_fn(|k| y[k] - y_star[k]);
    let w: [f64; 6] = std::array::from_fn(|k| y[k] + y_star[k]);
    let (nu, nw) = (inner(&u, &u).sqrt(), inner(&w, &w).sqrt());
    let denom = s + 0.5 * nu * nw;
    let one_minus_p = 0.5 * nu * (nu + nw) / denom;
    let one_plus_p = 0.5 * nw * (nu + nw) / denom;
    let gap = one_minus_p * one_plus_p;
    if !(gap >= SINGULAR_GAP) {
        return Err(Error::SingularProjection { gap });
    }
    // Y - p Y* = (Y - Y*) + (1 - p) Y* = (Y + Y*) - (1 + p) Y*; use the form
    // whose correction term is small.
    let x: [f64; 6] = if c >= 0.0 {
        std::array::from_fn(|k| (u[k] + one_minus_p * y_star[k]) / gap)
    } else {
        std::array::from_fn(|k| (w[k] - one_plus_p * y_star[k]) / gap)
    };
    PluckerVector::from_x(x)
}

/// A separated boundary matrix whose minors are proportional to `v`.
///
/// With `A = [[p, q, 0, 0], [0, 0, r, s]]` the minors are
/// `A13 = pr, A14 = ps, A23 = qr, A24 = qs`. One of the four is scaled to 1;
/// the preference order is `A13, A24, A14, A23`, skipping any candidate
/// smaller than a tenth of the largest so the division stays well
/// conditioned.
pub fn reconstruct_matrix(v: &PluckerVector) -> Result<BoundaryConditions> {
    let residual = plucker_residual(v);
    if !(residual.relative.abs() <= QUADRIC_TOLERANCE) {
        return Err(Error::OffQuadric { relative: residual.relative });
    }
    let m = v.minors();
    let norm = v.norm();
    if m[0].abs() > QUADRIC_TOLERANCE * norm || m[5].abs() > QUADRIC_TOLERANCE * norm {
        return Err(Error::Unsupported(format!(
            "reconstruction needs separated conditions (A12 = A34 = 0), got A12={}, A34={}",
            m[0], m[5]
        )));
    }
    let [a13, a14, a23, a24] = v.separated_part();
    let largest = [a13, a14, a23, a24].iter().fold(0.0_f64, |acc, x| acc.max(x.abs()));
    let usable = |x: f64| x.abs() >= 0.1 * largest;

    let rows: Matrix2x4 = if usable(a13) {
        [[1.0, a23 / a13, 0.0, 0.0], [0.0, 0.0, 1.0, a14 / a13]]
    } else if usable(a24) {
        [[a14 / a24, 1.0, 0.0, 0.0], [0.0, 0.0, a23 / a24, 1.0]]
    } else if usable(a14) {
        [[1.0, a24 / a14, 0.0, 0.0], [0.0, 0.0, a13 / a14, 1.0]]
    } else {
        [[a13 / a23, 1.0, 0.0, 0.0], [0.0, 0.0, 1.0, a24 / a23]]
    };
    BoundaryConditions::new(rows)
}

/// Whether two boundary matrices have proportional minors, comparing
/// canonical Plücker vectors at Euclidean tolerance `tol`.
pub fn equivalent(bc1: &BoundaryConditions, bc2: &BoundaryConditions, tol: f64) -> bool {
    match (minors_of(bc1), minors_of(bc2)) {
        (Ok(p), Ok(q)) => p.distance(&q) <= tol,
        _ => false,
    }
}
