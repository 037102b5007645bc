#![no_main]

use libfuzzer_sys::fuzz_target;
use ringbc::cli::parse_separated_matrix;
use ringbc::BoundaryConditions;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok([k1, k2, k3, k4]) = parse_separated_matrix(text) {
        let _ = BoundaryConditions::separated(k1, k2, k3, k4);
    }
});
