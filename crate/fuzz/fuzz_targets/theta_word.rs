#![no_main]

use libfuzzer_sys::fuzz_target;
use sl2tilt::endofun::ThetaWordObject;
use sl2tilt::soergel::{parse_seq, seq_to_string};

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(x) = text.parse::<ThetaWordObject>() {
        assert_eq!(x.to_string().parse::<ThetaWordObject>().unwrap(), x);
    }
    if let Ok(seq) = parse_seq(text) {
        assert_eq!(parse_seq(&seq_to_string(&seq)).unwrap(), seq);
    }
});
