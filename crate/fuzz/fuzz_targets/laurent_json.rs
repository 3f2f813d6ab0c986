#![no_main]

use libfuzzer_sys::fuzz_target;
use sl2tilt::LaurentPoly;

fuzz_target!(|data: &[u8]| {
    if let Ok(p) = serde_json::from_slice::<LaurentPoly>(data) {
        let s = serde_json::to_string(&p).expect("decoded polynomial serialises");
        assert_eq!(serde_json::from_str::<LaurentPoly>(&s).unwrap(), p);
    }
});
