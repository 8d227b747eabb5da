#![no_main]

use libfuzzer_sys::fuzz_target;
use sigma_core::zie::{dynkin_element, Cell};

fuzz_target!(|data: &[u8]| {
    if let Ok(cell) = serde_json::from_slice::<Cell>(data) {
        // decoded cells are realizable, so the Dynkin element is defined
        if cell.ground().len() <= 4 {
            let _ = dynkin_element(&cell);
        }
    }
});
