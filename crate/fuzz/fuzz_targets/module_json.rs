#![no_main]

use libfuzzer_sys::fuzz_target;
use sl2tilt::quiver::{QuiverMatrix, Summand};

fuzz_target!(|data: &[u8]| {
    if let Ok(module) = serde_json::from_slice::<Vec<Summand>>(data) {
        if module.len() <= 64 && module.iter().all(|s| s.vertex <= 64) {
            QuiverMatrix::identity(module).validate().expect("identity is well formed");
        }
    }
});
