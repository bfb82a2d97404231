#![no_main]

use algebroid::rational::{format_rational, parse_rational};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(x) = parse_rational(text) {
        let canonical = format_rational(&x);
        assert_eq!(parse_rational(&canonical).unwrap(), x);
    }
});
