#![no_main]

use libfuzzer_sys::fuzz_target;
use sl2tilt::CycScalar;

fuzz_target!(|data: &[u8]| {
    if let Ok(x) = serde_json::from_slice::<CycScalar>(data) {
        if let Ok(s) = serde_json::to_string(&x) {
            assert_eq!(serde_json::from_str::<CycScalar>(&s).unwrap(), x);
        }
        if !x.is_zero() {
            assert!((&x * &x.inverse().unwrap()).is_one());
        }
    }
});
