//! Eigenvalues of the fastened membrane as positive zeros of `Δ(λ)`.
//!
//! A uniform scan over `(lambda_min, lambda_max)` brackets sign changes and
//! each bracket is refined by [`refine_root`]. Roots of even multiplicity
//! (tangencies) produce no sign change and are not reported.

use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::spectral::{determinant_unchecked, Annulus, BoundaryConditions, Spectrum};

const MAX_REFINE_ITERATIONS: usize = 200;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SearchConfig {
    pub lambda_min: f64,
    pub lambda_max: f64,
    pub scan_step: f64,
    pub root_tolerance: f64,
    pub max_roots: usize,
}

impl SearchConfig {
    /// Defaults tuned to the annulus: the scan step is
    /// `min(0.05, π / (8 (b - a)))`, about eight samples per expected gap
    /// between consecutive roots.
    pub fn for_annulus(annulus: &Annulus) -> Self {
        Self {
            lambda_min: 1e-3,
            lambda_max: 200.0,
            scan_step: default_scan_step(annulus),
            root_tolerance: 1e-10,
            max_roots: 1000,
        }
    }

    pub fn validate(&self) -> Result<()> {
        let finite = [self.lambda_min, self.lambda_max, self.scan_step, self.root_tolerance]
            .iter()
            .all(|v| v.is_finite());
        if !finite {
            return Err(Error::InvalidConfig("all parameters must be finite".into()));
        }
        if !(self.lambda_min > 0.0) {
            return Err(Error::InvalidConfig(format!(
                "lambda_min must be positive, got {}",
                self.lambda_min
            )));
        }
        if !(self.lambda_min < self.lambda_max) {
            return Err(Error::InvalidConfig(format!(
                "need lambda_min < lambda_max, got {} and {}",
                self.lambda_min, self.lambda_max
            )));
        }
        if !(self.scan_step > 0.0) {
            return Err(Error::InvalidConfig("scan_step must be positive".into()));
        }
        if !(self.root_tolerance > 0.0) {
            return Err(Error::InvalidConfig("root_tolerance must be positive".into()));
        }
        Ok(())
    }
}

pub fn default_scan_step(annulus: &Annulus) -> f64 {
    (PI / (8.0 * annulus.width())).min(0.05)
}

/// A located root together with the scan cell that bracketed it.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LocatedRoot {
    pub lambda: f64,
    pub cell: (f64, f64),
}

/// First `count` sign-change roots of `λ ↦ Δ(λ)` in increasing order.
pub fn find_eigenvalues(
    bc: &BoundaryConditions,
    annulus: &Annulus,
    count: usize,
    config: &SearchConfig,
) -> Result<Spectrum> {
    let roots = locate_roots(bc, annulus, count, config)?;
    Spectrum::new(roots.into_iter().map(|r| r.lambda).collect())
}

/// Like [`find_eigenvalues`], also returning each root's scan cell.
pub fn locate_roots(
    bc: &BoundaryConditions,
    annulus: &Annulus,
    count: usize,
    config: &SearchConfig,
) -> Result<Vec<LocatedRoot>> {
    config.validate()?;
    if count > config.max_roots {
        return Err(Error::InvalidConfig(format!(
            "requested {count} roots, max_roots is {}",
            config.max_roots
        )));
    }
    let delta = |l: f64| determinant_unchecked(bc, annulus, l);

    let mut found = Vec::with_capacity(count);
    let mut lo = config.lambda_min;
    let mut f_lo = delta(lo);
    let mut k: u64 = 1;
    while found.len() < count && lo < config.lambda_max {
        // Grid points are computed from the index so no step error accumulates.
        let hi = (config.lambda_min + k as f64 * config.scan_step).min(config.lambda_max);
        k += 1;
        let f_hi = delta(hi);
        if !f_hi.is_finite() {
            return Err(Error::Domain(format!("characteristic determinant not finite at {hi}")));
        }
        if f_hi == 0.0 {
            found.push(LocatedRoot { lambda: hi, cell: (lo, hi) });
            // Restart the scan just past the exact zero.
            lo = hi;
            f_lo = f_hi;
            continue;
        }
        if f_lo != 0.0 && f_lo.signum() != f_hi.signum() {
            let lambda = refine_root(delta, lo, hi, config.root_tolerance)?;
            found.push(LocatedRoot { lambda, cell: (lo, hi) });
        }
        lo = hi;
        f_lo = f_hi;
    }
    if found.len() < count {
        return Err(Error::NotEnoughRoots {
            requested: count,
            found: found.len(),
            lambda_max: config.lambda_max,
        });
    }
    Ok(found)
}

/// Largest `|Δ|` over a scan cell, sampled at 17 evenly spaced points.
pub fn local_scale(bc: &BoundaryConditions, annulus: &Annulus, cell: (f64, f64)) -> f64 {
    let (lo, hi) = cell;
    (0..=16)
        .map(|k| determinant_unchecked(bc, annulus, lo + (hi - lo) * k as f64 / 16.0).abs())
        .fold(0.0, f64::max)
}

/// Brent's method on a sign-change bracket.
///
/// Returns a point whose enclosing bracket has width at most `tol` (or the
/// floating-point resolution near the root, if coarser). `f` is evaluated
/// only inside `[lo, hi]`.
pub fn refine_root<F>(f: F, lo: f64, hi: f64, tol: f64) -> Result<f64>
where
    F: Fn(f64) -> f64,
{
    if !(lo < hi) || !(tol > 0.0) {
        return Err(Error::Domain(format!(
            "need lo < hi and tol > 0, got [{lo}, {hi}], tol={tol}"
        )));
    }
    let (mut a, mut b) = (lo, hi);
    let (mut fa, mut fb) = (f(a), f(b));
    if fa == 0.0 {
        return Ok(a);
    }
    if fb == 0.0 {
        return Ok(b);
    }
    if !(fa * fb < 0.0) {
        return Err(Error::NoSignChange { lo, hi, f_lo: fa, f_hi: fb });
    }

    // b is the best estimate, [b, c] always brackets the root, a is the
    // previous b.
    let mut c = a;
    let mut fc = fa;
    let mut d = b - a;
    let mut e = d;
    for _ in 0..MAX_REFINE_ITERATIONS {
        if fb.signum() == fc.signum() {
            c = a;
            fc = fa;
            d = b - a;
            e = d;
        }
        if fc.abs() < fb.abs() {
            a = b;
            b = c;
            c = a;
            fa = fb;
            fb = fc;
            fc = fa;
        }
        let tol1 = (0.5 * tol).max(2.0 * f64::EPSILON * b.abs());
        let m = 0.5 * (c - b);
        if m.abs() <= tol1 || fb == 0.0 {
            return Ok(b);
        }
        if e.abs() >= tol1 && fa.abs() > fb.abs() {
            let s = fb / fa;
            let (mut p, mut q);
            if a == c {
                p = 2.0 * m * s;
                q = 1.0 - s;
            } else {
                let qa = fa / fc;
                let r = fb / fc;
                p = s * (2.0 * m * qa * (qa - r) - (b - a) * (r - 1.0));
                q = (qa - 1.0) * (r - 1.0) * (s - 1.0);
            }
            if p > 0.0 {
                q = -q;
            } else {
                p = -p;
            }
            if 2.0 * p < (3.0 * m * q - (tol1 * q).abs()).min((e * q).abs()) {
                e = d;
                d = p / q;
            } else {
                d = m;
                e = m;
            }
        } else {
            d = m;
            e = m;
        }
        a = b;
        fa = fb;
        b += if d.abs() > tol1 { d } else { tol1.copysign(m) };
        fb = f(b);
    }
    Ok(b)
}
