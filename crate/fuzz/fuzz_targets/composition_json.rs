#![no_main]

use libfuzzer_sys::fuzz_target;
use sigma_core::Composition;

fuzz_target!(|data: &[u8]| {
    if let Ok(f) = serde_json::from_slice::<Composition>(data) {
        let json = serde_json::to_string(&f).unwrap();
        assert_eq!(serde_json::from_str::<Composition>(&json).unwrap(), f);
    }
});
