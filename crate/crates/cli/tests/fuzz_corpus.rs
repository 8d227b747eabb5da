//! Replays the checked-in fuzz seeds through the decoders they target.

use std::fs;
use std::path::PathBuf;

use sigma_cli::scenario::ScenarioConfig;
use sigma_core::arrows::TruncatedSeries;
use sigma_core::products::TargetPoly;
use sigma_core::species::SigElement;
use sigma_core::zie::{Cell, Tree};
use sigma_core::{Composition, Label, Scalar};

fn seeds(target: &str) -> Vec<(String, Vec<u8>)> {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fuzz/corpus").join(target);
    let mut out: Vec<_> = fs::read_dir(&dir)
        .unwrap_or_else(|e| panic!("{}: {e}", dir.display()))
        .map(|e| {
            let p = e.unwrap().path();
            (p.file_name().unwrap().to_string_lossy().into_owned(), fs::read(&p).unwrap())
        })
        .collect();
    out.sort();
    assert!(!out.is_empty(), "no seeds for {target}");
    out
}

fn text(data: &[u8]) -> &str {
    std::str::from_utf8(data).unwrap()
}

/// Seeds named `bad`, `dup`, `over`, `mismatch`, `unrealizable` or
/// `zero_den` must be rejected; every other seed must decode.
fn expect_ok(name: &str) -> bool {
    !matches!(name, "bad" | "dup" | "over" | "mismatch" | "unrealizable" | "zero_den")
}

#[test]
fn composition_seeds() {
    for (name, data) in seeds("composition_text") {
        let parsed = text(&data).parse::<Composition>();
        assert_eq!(parsed.is_ok(), expect_ok(&name), "{name}");
        if let Ok(f) = parsed {
            assert_eq!(f.to_string().parse::<Composition>().unwrap(), f);
        }
    }
    for (name, data) in seeds("composition_json") {
        assert_eq!(serde_json::from_slice::<Composition>(&data).is_ok(), expect_ok(&name), "{name}");
    }
}

#[test]
fn scalar_and_label_seeds() {
    for (name, data) in seeds("label_text") {
        assert_eq!(text(&data).parse::<Label>().is_ok(), expect_ok(&name), "{name}");
    }
    for (name, data) in seeds("scalar_text") {
        assert_eq!(text(&data).parse::<Scalar>().is_ok(), expect_ok(&name), "{name}");
    }
}

#[test]
fn structured_seeds() {
    for (name, data) in seeds("sig_element_json") {
        assert_eq!(serde_json::from_slice::<SigElement>(&data).is_ok(), expect_ok(&name), "{name}");
    }
    for (name, data) in seeds("cell_json") {
        assert_eq!(serde_json::from_slice::<Cell>(&data).is_ok(), expect_ok(&name), "{name}");
    }
    for (name, data) in seeds("tree_text") {
        assert_eq!(text(&data).parse::<Tree>().is_ok(), expect_ok(&name), "{name}");
    }
    for (name, data) in seeds("target_poly_json") {
        assert_eq!(serde_json::from_slice::<TargetPoly>(&data).is_ok(), expect_ok(&name), "{name}");
    }
    for (name, data) in seeds("truncated_series_json") {
        assert_eq!(serde_json::from_slice::<TruncatedSeries>(&data).is_ok(), expect_ok(&name), "{name}");
    }
    for (name, data) in seeds("scenario_json") {
        assert_eq!(ScenarioConfig::from_json(text(&data)).is_ok(), expect_ok(&name), "{name}");
    }
}
