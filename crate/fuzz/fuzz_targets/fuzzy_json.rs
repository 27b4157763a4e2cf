#![no_main]

use fuzzfrac_core::FuzzyNumber;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    if let Ok(x) = serde_json::from_slice::<FuzzyNumber>(data) {
        let text = serde_json::to_string(&x).unwrap();
        let back: FuzzyNumber = serde_json::from_str(&text).unwrap();
        assert_eq!(back, x);
        assert_eq!(serde_json::to_string(&back).unwrap(), text);
    }
});
