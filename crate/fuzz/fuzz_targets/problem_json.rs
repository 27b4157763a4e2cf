#![no_main]

use fuzzfrac_core::IvpProblem;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(p) = IvpProblem::from_json(text) {
        let once = p.to_json_pretty();
        let back = IvpProblem::from_json(&once).expect("serialized problem parses");
        assert_eq!(back, p);
        assert_eq!(back.to_json_pretty(), once);
    }
});
