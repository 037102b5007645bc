mod common;

use std::f64::consts::PI;

use rand::Rng;
use ringbc::bessel::{bessel, j0, j1, radial_derivative, y0, y1, CylinderKind};

#[test]
fn wronskian_identity() {
    for k in 0..=10_000 {
        let x = 0.1 + (100.0 - 0.1) * k as f64 / 10_000.0;
        let w = j1(x) * y0(x) - j0(x) * y1(x);
        let expected = 2.0 / (PI * x);
        assert!(((w - expected) / expected).abs() <= 1e-9, "x={x}: {w} vs {expected}");
    }
}

#[test]
fn agrees_with_series_on_small_arguments() {
    for k in 0..=400 {
        let x = k as f64 * 0.025;
        assert!((j0(x) - common::series_j0(x)).abs() <= 1e-12, "J0({x})");
        assert!((j1(x) - common::series_j1(x)).abs() <= 1e-12, "J1({x})");
    }
}

#[test]
fn first_zeros_of_j0_match_series_oracle() {
    // Roots of the series oracle, then compare with 20-digit constants.
    let published = [2.404_825_557_695_772_8, 5.520_078_110_286_310_6, 8.653_727_912_911_012_2];
    let oracle = common::scan_roots(common::series_j0, 0.5, 10.0, 0.01, 3, 1e-14);
    for (o, p) in oracle.iter().zip(&published) {
        assert!((o - p).abs() <= 1e-12);
        assert!(j0(*p).abs() <= 1e-10);
    }
}

#[test]
fn derivative_consistency() {
    let mut rng = common::rng(11);
    let h = 1e-6;
    for _ in 0..1000 {
        let lambda: f64 = rng.random_range(0.5..20.0);
        let r: f64 = rng.random_range(0.5..5.0);
        for (kind, f) in [(CylinderKind::FirstKind, j0 as fn(f64) -> f64), (CylinderKind::SecondKind, y0)] {
            let fd = (f(lambda * (r + h)) - f(lambda * (r - h))) / (2.0 * h);
            let d = radial_derivative(kind, lambda, r).unwrap();
            assert!((d - fd).abs() <= 1e-5, "{kind:?} λ={lambda} r={r}: {d} vs {fd}");
        }
    }
}

#[test]
fn j0_solves_the_radial_equation() {
    let h = 1e-4;
    for i in 0..20 {
        for k in 0..20 {
            let lambda = 0.5 + 9.5 * i as f64 / 19.0;
            let r = 0.5 + 9.5 * k as f64 / 19.0;
            let y = |r: f64| j0(lambda * r);
            let ypp = (y(r + h) - 2.0 * y(r) + y(r - h)) / (h * h);
            let yp = (y(r + h) - y(r - h)) / (2.0 * h);
            let residual = ypp + yp / r + lambda * lambda * y(r);
            assert!(residual.abs() <= 1e-4, "λ={lambda} r={r}: {residual}");
        }
    }
}

#[test]
fn zeros_of_j0_and_j1_interlace() {
    let z0 = common::scan_roots(j0, 1e-3, 50.0, 1e-3, usize::MAX, 1e-12);
    // J1 vanishes at the origin; start just after it.
    let z1 = common::scan_roots(j1, 1e-3, 50.0, 1e-3, usize::MAX, 1e-12);
    assert!(z0.len() >= 15 && z1.len() >= 15);
    let mut merged: Vec<(f64, u8)> = z0.iter().map(|&z| (z, 0)).chain(z1.iter().map(|&z| (z, 1))).collect();
    merged.sort_by(|a, b| a.0.total_cmp(&b.0));
    for w in merged.windows(2) {
        assert_ne!(w[0].1, w[1].1, "zeros at {} and {} do not interlace", w[0].0, w[1].0);
        assert!(w[0].0 < w[1].0);
    }
    assert_eq!(merged[0].1, 0, "first positive zero belongs to J0");
}

#[test]
fn dispatch_matches_raw_functions() {
    for x in [1e-6, 0.3, 5.0, 17.0, 1e4] {
        assert_eq!(bessel(CylinderKind::FirstKind, 0, x).unwrap(), j0(x));
        assert_eq!(bessel(CylinderKind::FirstKind, 1, x).unwrap(), j1(x));
        assert_eq!(bessel(CylinderKind::SecondKind, 0, x).unwrap(), y0(x));
        assert_eq!(bessel(CylinderKind::SecondKind, 1, x).unwrap(), y1(x));
    }
}
