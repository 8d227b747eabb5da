#![no_main]

use libfuzzer_sys::fuzz_target;
use sigma_core::species::SigElement;

fuzz_target!(|data: &[u8]| {
    if let Ok(a) = serde_json::from_slice::<SigElement>(data) {
        let json = serde_json::to_string(&a).unwrap();
        assert_eq!(serde_json::from_str::<SigElement>(&json).unwrap(), a);
    }
});
