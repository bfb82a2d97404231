#![no_main]

use algebroid::format::{fiber_to_json, parse_fiber};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(f) = parse_fiber(text) {
        let canonical = fiber_to_json(&f);
        assert_eq!(parse_fiber(&canonical).unwrap(), f);
    }
});
