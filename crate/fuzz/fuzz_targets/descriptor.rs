#![no_main]

use libfuzzer_sys::fuzz_target;
use ringbc::cli::{Mode, RunDescriptor};

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    let Ok(descriptor) = RunDescriptor::from_json_str(text) else { return };
    for mode in [Mode::Forward, Mode::Inverse, Mode::Roundtrip, Mode::Probe] {
        let _ = descriptor.validate(mode);
    }
});
