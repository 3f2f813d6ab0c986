#![no_main]

use libfuzzer_sys::fuzz_target;
use sl2tilt::soergel::dsl::{parse_diagram, serialize};

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(d) = parse_diagram(text) {
        let again = parse_diagram(&serialize(&d)).expect("serialised diagram parses");
        assert_eq!(again, d);
    }
});
