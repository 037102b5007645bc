mod common;

use std::f64::consts::PI;

use rand::Rng;
use ringbc::bessel::{j0, y0};
use ringbc::forward::{local_scale, locate_roots};
use ringbc::spectral::{binet_cauchy_sum, basis_minor};
use ringbc::{characteristic_determinant, find_eigenvalues, Annulus, BoundaryConditions, SearchConfig};

fn clamped() -> BoundaryConditions {
    BoundaryConditions::new([[0.0, 1.0, 0.0, 0.0], [0.0, 0.0, 0.0, 1.0]]).unwrap()
}

/// Δ for y(a) = y(b) = 0 written out by hand.
fn clamped_oracle(a: f64, b: f64, l: f64) -> f64 {
    j0(l * a) * y0(l * b) - y0(l * a) * j0(l * b)
}

#[test]
fn binet_cauchy_expansion() {
    let mut rng = common::rng(21);
    for _ in 0..1000 {
        let bc = common::random_matrix(&mut rng);
        let a: f64 = rng.random_range(0.1..3.0);
        let ann = Annulus::new(a, a + rng.random_range(0.1..3.0)).unwrap();
        let l: f64 = rng.random_range(0.05..30.0);
        let direct = characteristic_determinant(&bc, &ann, l).unwrap();
        let expanded = binet_cauchy_sum(&bc, &ann, l).unwrap();
        assert!((direct - expanded).abs() <= 1e-12 * direct.abs().max(1.0), "{direct} vs {expanded}");
    }
}

#[test]
fn row_operations_scale_by_det() {
    let mut rng = common::rng(22);
    let ann = Annulus::new(1.0, 2.0).unwrap();
    for _ in 0..200 {
        let bc = common::random_matrix(&mut rng);
        let s: [[f64; 2]; 2] = std::array::from_fn(|_| std::array::from_fn(|_| rng.random_range(-2.0..2.0)));
        let det = s[0][0] * s[1][1] - s[0][1] * s[1][0];
        if det.abs() < 0.1 {
            continue;
        }
        let t = bc.transformed(s).unwrap();
        let l: f64 = rng.random_range(0.5..20.0);
        let d = characteristic_determinant(&bc, &ann, l).unwrap();
        let dt = characteristic_determinant(&t, &ann, l).unwrap();
        assert!((dt - det * d).abs() <= 1e-11 * (det * d).abs().max(1.0));
    }
}

#[test]
fn clamped_determinant_matches_hand_expansion() {
    let ann = Annulus::new(1.0, 2.0).unwrap();
    for k in 1..=500 {
        let l = 0.04 * k as f64;
        let d = characteristic_determinant(&clamped(), &ann, l).unwrap();
        assert!((d - clamped_oracle(1.0, 2.0, l)).abs() <= 1e-14);
        assert_eq!(basis_minor(&ann, l, 2, 4).unwrap(), d);
    }
}

#[test]
fn finite_on_wide_grid() {
    let mut rng = common::rng(23);
    let bcs: Vec<_> = (0..20).map(|_| common::random_matrix(&mut rng)).collect();
    let ann = Annulus::new(0.5, 3.0).unwrap();
    for k in 0..=2000 {
        let l = 0.01 * (1e4f64).powf(k as f64 / 2000.0);
        for bc in &bcs {
            assert!(characteristic_determinant(bc, &ann, l).unwrap().is_finite(), "λ={l}");
        }
    }
}

#[test]
fn clamped_eigenvalues_match_dense_scan() {
    for (a, b) in [(1.0, 2.0), (0.5, 3.0), (2.0, 2.5)] {
        let ann = Annulus::new(a, b).unwrap();
        let found = find_eigenvalues(&clamped(), &ann, 6, &SearchConfig::for_annulus(&ann)).unwrap();
        let oracle = common::scan_roots(|l| clamped_oracle(a, b, l), 1e-3, 200.0, 1e-4, 6, 1e-13);
        for (f, o) in found.as_slice().iter().zip(&oracle) {
            assert!((f - o).abs() <= 1e-9, "a={a} b={b}: {f} vs {o}");
        }
    }
}

#[test]
fn residuals_small_relative_to_local_scale() {
    let mut rng = common::rng(24);
    let ann = Annulus::new(1.0, 2.0).unwrap();
    for _ in 0..30 {
        let bc = common::random_matrix(&mut rng);
        let search = SearchConfig::for_annulus(&ann);
        for root in locate_roots(&bc, &ann, 5, &search).unwrap() {
            let d = characteristic_determinant(&bc, &ann, root.lambda).unwrap().abs();
            assert!(d <= 1e-6 * local_scale(&bc, &ann, root.cell), "λ={} |Δ|={d}", root.lambda);
        }
    }
}

#[test]
fn high_eigenvalues_spaced_by_pi_over_width() {
    let ann = Annulus::new(1.0, 2.0).unwrap();
    let mut rng = common::rng(25);
    for bc in [clamped(), common::random_separated(&mut rng), common::random_separated(&mut rng)] {
        let found = find_eigenvalues(&bc, &ann, 40, &SearchConfig::for_annulus(&ann)).unwrap();
        let s = found.as_slice();
        for w in s[30..].windows(2) {
            let gap = w[1] - w[0];
            assert!((gap - PI).abs() <= 0.2 * PI, "gap {gap}");
        }
    }
}

#[test]
fn spectrum_invariant_under_row_operations() {
    let ann = Annulus::new(1.0, 2.0).unwrap();
    let mut rng = common::rng(26);
    for _ in 0..20 {
        let bc = common::random_matrix(&mut rng);
        let t = bc.transformed([[2.0, -1.0], [0.5, 3.0]]).unwrap();
        let search = SearchConfig::for_annulus(&ann);
        let s1 = find_eigenvalues(&bc, &ann, 5, &search).unwrap();
        let s2 = find_eigenvalues(&t, &ann, 5, &search).unwrap();
        for (x, y) in s1.as_slice().iter().zip(s2.as_slice()) {
            assert!((x - y).abs() <= 1e-9);
        }
    }
}

#[test]
fn search_is_deterministic() {
    let ann = Annulus::new(1.0, 2.0).unwrap();
    let bc = BoundaryConditions::separated(1.0, 2.0, 1.0, 2.0).unwrap();
    let search = SearchConfig::for_annulus(&ann);
    let first = find_eigenvalues(&bc, &ann, 10, &search).unwrap().into_vec();
    for _ in 0..3 {
        assert_eq!(find_eigenvalues(&bc, &ann, 10, &search).unwrap().into_vec(), first);
    }
}
