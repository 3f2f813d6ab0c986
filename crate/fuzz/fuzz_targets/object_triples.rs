#![no_main]

use libfuzzer_sys::fuzz_target;
use sl2tilt::tiltcat::{object_from_triples, object_triples};

fuzz_target!(|data: &[u8]| {
    if let Ok(triples) = serde_json::from_slice::<Vec<(usize, i64, usize)>>(data) {
        if let Ok(obj) = object_from_triples(&triples) {
            assert_eq!(object_triples(&obj), triples);
        }
    }
});
