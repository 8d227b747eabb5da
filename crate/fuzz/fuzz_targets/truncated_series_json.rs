#![no_main]

use libfuzzer_sys::fuzz_target;
use sigma_core::arrows::TruncatedSeries;

fuzz_target!(|data: &[u8]| {
    let _ = serde_json::from_slice::<TruncatedSeries>(data);
});
