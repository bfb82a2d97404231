#![no_main]

use algebroid::circle::TrigPoly;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(p) = text.parse::<TrigPoly>() {
        let canonical = p.to_string();
        let back: TrigPoly = canonical.parse().unwrap();
        assert_eq!(back, p);
        assert_eq!(back.to_string(), canonical);
    }
});
