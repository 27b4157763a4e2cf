#![no_main]

use fuzzfrac_core::fuzzy::{parse_shorthand, AlphaGrid};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(x) = parse_shorthand(text, AlphaGrid::new(8).unwrap()) {
        assert!(x.lower().iter().zip(x.upper()).all(|(l, u)| l <= u));
        assert!(x.lower().iter().chain(x.upper()).all(|v| v.is_finite()));
    }
});
