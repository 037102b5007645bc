//! Oracles and generators shared by the integration tests. None of these
//! call into the solver paths they are used to check.
#![allow(dead_code)]

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use ringbc::BoundaryConditions;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Rank-2 matrix with entries uniform in `[-3, 3]`.
pub fn random_matrix(rng: &mut ChaCha8Rng) -> BoundaryConditions {
    loop {
        let mut rows = [[0.0; 4]; 2];
        for v in rows.iter_mut().flatten() {
            *v = rng.random_range(-3.0..3.0);
        }
        if let Ok(bc) = BoundaryConditions::new(rows) {
            return bc;
        }
    }
}

/// Separated rank-2 matrix `[[p, q, 0, 0], [0, 0, r, s]]`, entries in `[-3, 3]`.
pub fn random_separated(rng: &mut ChaCha8Rng) -> BoundaryConditions {
    loop {
        let [p, q, r, s]: [f64; 4] = std::array::from_fn(|_| rng.random_range(-3.0..3.0));
        if let Ok(bc) = BoundaryConditions::new([[p, q, 0.0, 0.0], [0.0, 0.0, r, s]]) {
            return bc;
        }
    }
}

/// `J0` and `J1` by their ascending series, summed until terms vanish.
/// Accurate to ~1e-14 absolute for `x <= 10`.
pub fn series_j0(x: f64) -> f64 {
    let q = -0.25 * x * x;
    let (mut term, mut sum) = (1.0, 1.0);
    for k in 1..200 {
        term *= q / (k as f64 * k as f64);
        sum += term;
        if term.abs() < 1e-18 {
            break;
        }
    }
    sum
}

pub fn series_j1(x: f64) -> f64 {
    let q = -0.25 * x * x;
    let (mut term, mut sum) = (0.5 * x, 0.5 * x);
    for k in 1..200 {
        term *= q / (k as f64 * (k + 1) as f64);
        sum += term;
        if term.abs() < 1e-18 {
            break;
        }
    }
    sum
}

/// Plain bisection to `tol`, starting from a sign change.
pub fn bisect(f: impl Fn(f64) -> f64, mut lo: f64, mut hi: f64, tol: f64) -> f64 {
    let mut f_lo = f(lo);
    assert!(f_lo * f(hi) < 0.0, "no sign change on [{lo}, {hi}]");
    while hi - lo > tol {
        let mid = 0.5 * (lo + hi);
        let f_mid = f(mid);
        if f_mid == 0.0 {
            return mid;
        }
        if (f_mid < 0.0) == (f_lo < 0.0) {
            lo = mid;
            f_lo = f_mid;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}

/// First `count` roots of `f` on `(start, end)` by a scan with step `step`
/// followed by bisection to `tol`.
pub fn scan_roots(f: impl Fn(f64) -> f64, start: f64, end: f64, step: f64, count: usize, tol: f64) -> Vec<f64> {
    let mut roots = Vec::new();
    let mut k = 0u64;
    let mut x0 = start;
    let mut f0 = f(x0);
    while roots.len() < count && x0 < end {
        k += 1;
        let x1 = start + k as f64 * step;
        let f1 = f(x1);
        if f0 * f1 < 0.0 {
            roots.push(bisect(&f, x0, x1, tol));
        }
        x0 = x1;
        f0 = f1;
    }
    roots
}

/// Null vector of a 3×4 matrix by signed 3×3 cofactors.
pub fn cofactor_null_vector(m: &[[f64; 4]; 3]) -> [f64; 4] {
    let det3 = |c: [usize; 3]| {
        let a = |r: usize, k: usize| m[r][c[k]];
        a(0, 0) * (a(1, 1) * a(2, 2) - a(1, 2) * a(2, 1)) - a(0, 1) * (a(1, 0) * a(2, 2) - a(1, 2) * a(2, 0))
            + a(0, 2) * (a(1, 0) * a(2, 1) - a(1, 1) * a(2, 0))
    };
    [det3([1, 2, 3]), -det3([0, 2, 3]), det3([0, 1, 3]), -det3([0, 1, 2])]
}

pub fn unit_up_to_sign<const N: usize>(v: [f64; N]) -> [f64; N] {
    let n = v.iter().map(|x| x * x).sum::<f64>().sqrt();
    let (mut pivot, mut best) = (0, 0.0);
    for (k, x) in v.iter().enumerate() {
        if x.abs() > best {
            best = x.abs();
            pivot = k;
        }
    }
    let s = if v[pivot] < 0.0 { -1.0 } else { 1.0 } / n;
    v.map(|x| x * s)
}

pub fn dist<const N: usize>(a: &[f64; N], b: &[f64; N]) -> f64 {
    a.iter().zip(b).map(|(x, y)| (x - y).powi(2)).sum::<f64>().sqrt()
}

/// Nelder–Mead minimization in `N` dimensions.
pub fn nelder_mead<const N: usize>(f: impl Fn(&[f64; N]) -> f64, start: [f64; N], scale: f64, iters: usize) -> [f64; N] {
    let mut simplex: Vec<[f64; N]> = vec![start];
    for i in 0..N {
        let mut p = start;
        p[i] += scale;
        simplex.push(p);
    }
    let mut values: Vec<f64> = simplex.iter().map(&f).collect();
    for _ in 0..iters {
        let mut idx: Vec<usize> = (0..=N).collect();
        idx.sort_by(|&a, &b| values[a].total_cmp(&values[b]));
        simplex = idx.iter().map(|&i| simplex[i]).collect();
        values = idx.iter().map(|&i| values[i]).collect();

        let mut centroid = [0.0; N];
        for p in &simplex[..N] {
            for k in 0..N {
                centroid[k] += p[k] / N as f64;
            }
        }
        let along = |t: f64| -> [f64; N] {
            std::array::from_fn(|k| centroid[k] + t * (simplex[N][k] - centroid[k]))
        };
        let reflected = along(-1.0);
        let fr = f(&reflected);
        if fr < values[0] {
            let expanded = along(-2.0);
            let fe = f(&expanded);
            if fe < fr {
                simplex[N] = expanded;
                values[N] = fe;
            } else {
                simplex[N] = reflected;
                values[N] = fr;
            }
        } else if fr < values[N - 1] {
            simplex[N] = reflected;
            values[N] = fr;
        } else {
            let contracted = along(0.5);
            let fc = f(&contracted);
            if fc < values[N] {
                simplex[N] = contracted;
                values[N] = fc;
            } else {
                let best = simplex[0];
                for i in 1..=N {
                    simplex[i] = std::array::from_fn(|k| best[k] + 0.5 * (simplex[i][k] - best[k]));
                    values[i] = f(&simplex[i]);
                }
            }
        }
    }
    let best = (0..=N).min_by(|&a, &b| values[a].total_cmp(&values[b])).unwrap();
    simplex[best]
}
