#![no_main]

use fuzzfrac_core::FuzzyPowerFunc;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(u) = serde_json::from_slice::<FuzzyPowerFunc>(data) else {
        return;
    };
    let text = serde_json::to_string(&u).unwrap();
    assert_eq!(serde_json::from_str::<FuzzyPowerFunc>(&text).unwrap(), u);
    // evaluation and the power rules must fail cleanly, never panic
    for t in [0.0, 1e-9, 0.5, 1.0] {
        let _ = u.eval(t);
    }
    for q in [0.1, 0.5, 0.9] {
        let _ = u.rl_deriv_power(q);
        let _ = u.rl_integral_power(q);
    }
});
