#![no_main]

use algebroid::format::parse_covector;
use algebroid::rational::format_rational;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(alpha) = parse_covector(text) {
        let joined: Vec<String> = alpha.iter().map(format_rational).collect();
        assert_eq!(parse_covector(&joined.join(",")).unwrap(), alpha);
    }
});
