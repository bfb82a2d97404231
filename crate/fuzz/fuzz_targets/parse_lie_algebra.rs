#![no_main]

use algebroid::format::{lie_algebra_to_json, parse_lie_algebra};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(g) = parse_lie_algebra(text) {
        let canonical = lie_algebra_to_json(&g);
        let back = parse_lie_algebra(&canonical).unwrap();
        assert_eq!(back, g);
        assert_eq!(lie_algebra_to_json(&back), canonical);
        if g.dim() <= 6 {
            let _ = algebroid::liealg::check_jacobi(&g);
        }
    }
});
