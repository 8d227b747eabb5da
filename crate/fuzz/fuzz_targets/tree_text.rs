#![no_main]

use libfuzzer_sys::fuzz_target;
use sigma_core::zie::Tree;

fuzz_target!(|data: &[u8]| {
    if let Ok(text) = std::str::from_utf8(data) {
        if let Ok(tree) = text.parse::<Tree>() {
            let _ = tree.debracket();
        }
    }
});
