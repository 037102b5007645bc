#![no_main]

use libfuzzer_sys::fuzz_target;
use ringbc::plucker::plucker_residual;
use ringbc::{project_to_quadric, reconstruct_matrix, PluckerVector};

// Six little-endian f64 quadric coordinates.
fuzz_target!(|data: &[u8]| {
    if data.len() < 48 {
        return;
    }
    let x: [f64; 6] = std::array::from_fn(|k| f64::from_le_bytes(data[8 * k..8 * k + 8].try_into().unwrap()));
    let Ok(v) = PluckerVector::from_x(x) else { return };
    let _ = plucker_residual(&v);
    if let Ok(p) = project_to_quadric(&v) {
        let _ = reconstruct_matrix(&p);
        let _ = p.normalized();
    }
    let _ = reconstruct_matrix(&v);
});
