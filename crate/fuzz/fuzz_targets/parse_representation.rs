#![no_main]

use algebroid::format::{parse_representation, representation_to_json};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(r) = parse_representation(text) {
        let canonical = representation_to_json(&r);
        assert_eq!(parse_representation(&canonical).unwrap(), r);
    }
});
