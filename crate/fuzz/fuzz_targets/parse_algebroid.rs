#![no_main]

use algebroid::format::{algebroid_to_json, parse_algebroid};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(spec) = parse_algebroid(text) {
        let canonical = algebroid_to_json(&spec);
        assert_eq!(parse_algebroid(&canonical).unwrap(), spec);
    }
});
