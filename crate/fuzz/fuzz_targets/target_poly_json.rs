#![no_main]

use libfuzzer_sys::fuzz_target;
use sigma_core::products::TargetPoly;

fuzz_target!(|data: &[u8]| {
    if let Ok(p) = serde_json::from_slice::<TargetPoly>(data) {
        let json = serde_json::to_string(&p).unwrap();
        assert_eq!(serde_json::from_str::<TargetPoly>(&json).unwrap(), p);
    }
});
