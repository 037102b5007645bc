//! Grid search for the annulus geometry under which the elastic fastening
//! `[[1, -2, 0, 0], [0, 0, 1, 2]]` has first eigenvalues closest to a target
//! triple (default 2.93, 6.16, 9.34).
//!
//! ```text
//! cargo run --release --example fit_geometry -- [a] [b_min] [b_max] [b_step]
//! ```

use ringbc::{find_eigenvalues, Annulus, BoundaryConditions, SearchConfig};

const TARGET: [f64; 3] = [2.93, 6.16, 9.34];

fn main() {
    let args: Vec<f64> = std::env::args().skip(1).map(|s| s.parse().expect("number")).collect();
    let inner = args.first().copied().unwrap_or(1.0);
    let b_min = args.get(1).copied().unwrap_or(1.5);
    let b_max = args.get(2).copied().unwrap_or(3.0);
    let b_step = args.get(3).copied().unwrap_or(1e-3);

    let bc = BoundaryConditions::separated(1.0, 2.0, 1.0, 2.0).unwrap();
    let mut best: Option<(f64, f64, Vec<f64>)> = None;
    let steps = ((b_max - b_min) / b_step).round() as usize;
    for k in 0..=steps {
        let outer = b_min + k as f64 * b_step;
        let Ok(annulus) = Annulus::new(inner, outer) else { continue };
        let config = SearchConfig { lambda_max: 40.0, ..SearchConfig::for_annulus(&annulus) };
        let Ok(spectrum) = find_eigenvalues(&bc, &annulus, 3, &config) else { continue };
        let misfit = spectrum
            .as_slice()
            .iter()
            .zip(&TARGET)
            .map(|(l, t)| (l - t).abs())
            .fold(0.0, f64::max);
        if best.as_ref().is_none_or(|(m, _, _)| misfit < *m) {
            best = Some((misfit, outer, spectrum.into_vec()));
        }
    }
    match best {
        Some((misfit, outer, roots)) => {
            println!("a = {inner}, best b = {outer:.4}, eigenvalues = {roots:.4?}, max misfit = {misfit:.4}")
        }
        None => println!("no geometry produced three eigenvalues"),
    }
}
