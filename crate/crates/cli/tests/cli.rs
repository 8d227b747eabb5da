use std::path::PathBuf;
use std::process::Command as Process;

use clap::Parser;
use sigma_cli::scenario::{ScenarioConfig, ScenarioError};
use sigma_cli::{execute, Cli, CliError, EXIT_PASS, EXIT_USAGE};
use sigma_core::verify::Suite;

fn run(args: &[&str]) -> Result<sigma_cli::Outcome, CliError> {
    let mut full = vec!["sigma"];
    full.extend_from_slice(args);
    execute(&Cli::try_parse_from(full).unwrap())
}

fn stdout(args: &[&str]) -> String {
    let out = run(args).unwrap();
    assert_eq!(out.code, EXIT_PASS, "{}", out.stdout);
    out.stdout
}

fn repo_file(rel: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../..").join(rel)
}

#[test]
fn enumeration_counts() {
    assert!(stdout(&["enumerate", "cells", "--n", "3"]).ends_with("count 6"));
    assert_eq!(stdout(&["enumerate", "compositions", "--n", "2"]), "(12)\n(1,2)\n(2,1)\ncount 3");
    assert!(stdout(&["enumerate", "refinements", "(12,3)"]).ends_with("count 3"));
    let json: serde_json::Value =
        serde_json::from_str(&stdout(&["enumerate", "cells", "--n", "4", "--json", "--seed", "9"])).unwrap();
    assert_eq!(json["count"], 32);
    assert_eq!(json["seed"], 9);
}

#[test]
fn enumeration_is_deterministic() {
    let a = stdout(&["enumerate", "cells", "--n", "4", "--seed", "3"]);
    let b = stdout(&["enumerate", "cells", "--n", "4", "--seed", "3"]);
    assert_eq!(a, b);
}

#[test]
fn computations() {
    let antipode: serde_json::Value = serde_json::from_str(&stdout(&["compute", "antipode", "(12)", "--json"])).unwrap();
    assert_eq!(antipode["terms"].as_array().unwrap().len(), 3);
    assert_eq!(stdout(&["compute", "tits", "(12,3)", "(13,2)"]), "(1,2,3)");
    assert!(stdout(&["compute", "qbasis", "(12)"]).ends_with("terms 3"));
    assert!(stdout(&["compute", "steinmann-arrow", "(12)"]).ends_with("terms 2"));
}

#[test]
fn dynkin_of_cell_file() {
    let dir = std::env::temp_dir().join(format!("sigma-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("cell.json");
    std::fs::write(&path, r#"{"ground":[1,2],"channels":[[[1],[2]]]}"#).unwrap();
    let p = path.to_str().unwrap();
    let out = stdout(&["compute", "dynkin", p, "--json"]);
    let d: sigma_core::species::SigElement = serde_json::from_str(&out).unwrap();
    assert!(d.is_primitive().unwrap());
    let moved = stdout(&["compute", "steinmann-arrow", "--cell", p, "--json"]);
    let cell: sigma_core::zie::Cell = serde_json::from_str(&moved).unwrap();
    assert_eq!(cell.ground().len(), 3);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn usage_and_bound_errors() {
    for args in [
        &["enumerate", "compositions", "--n", "12"][..],
        &["enumerate", "cells"],
        &["verify", "hopf", "--n", "9"],
        &["verify", "unknown"],
        &["compute", "tits", "(1,2)", "(1,3)"],
        &["compute", "antipode", "(1,1)"],
        &["compute", "steinmann-arrow"],
        &["verify"],
    ] {
        let err = run(args).unwrap_err();
        assert_eq!(err.exit_code(), EXIT_USAGE, "{args:?}");
    }
    assert!(run(&["enumerate", "compositions", "--n", "3", "--bound-override", "2"]).is_err());
    assert!(run(&["verify", "qbasis", "--n", "6", "--bound-override", "6"]).is_ok());
}

#[test]
fn verify_suites_from_the_command_line() {
    let out = stdout(&["verify", "hopf", "--n", "3"]);
    assert!(out.ends_with("PASS hopf"));
    let out = stdout(&["verify", "steinmann", "--n", "4"]);
    assert!(out.contains("[1, 2, 6, 26]"));
    let json: serde_json::Value =
        serde_json::from_str(&stdout(&["verify", "bogoliubov", "--ng", "2", "--nj", "2", "--json"])).unwrap();
    assert_eq!(json["config"]["ng"], 2);
    assert!(json["checks"].as_array().unwrap().iter().all(|c| c["failed"] == 0));
}

#[test]
fn scenario_files() {
    let path = repo_file("scenarios/scattering.json");
    let out = stdout(&["verify", "--scenario", path.to_str().unwrap()]);
    assert!(out.starts_with("suite scattering (n=3, Ng=2, Nj=3, seed=7)"), "{out}");
    assert!(out.contains("PASS scattering identity:"));
    assert!(out.contains("non-respecting configuration refused"));
    let path = repo_file("scenarios/causal.json");
    let out = stdout(&["verify", "--scenario", path.to_str().unwrap()]);
    assert!(out.contains("PASS causal factorization"));
}

#[test]
fn scenario_validation() {
    let ok = ScenarioConfig::from_json(r#"{"suite":"products","decorations":[{"symbol":"A","time":"1/2"}]}"#).unwrap();
    assert_eq!(ok.suite, Some(Suite::Products));
    let bad = [
        (r#"{"decorations":[{"symbol":"A","time":1},{"symbol":"A","time":2}]}"#, "duplicate"),
        (r#"{"decorations":[{"symbol":"","time":1}]}"#, "symbol"),
        (r#"{"decorations":[{"symbol":"A B","time":1}]}"#, "symbol"),
        (r#"{"decorations":[{"symbol":"A","time":"x"}]}"#, "number"),
        (r#"{"decorations":[{"symbol":"A","time":"1/0"}]}"#, "number"),
        (r#"{"decorations":[{"symbol":"A","time":1,"character":"q"}]}"#, "number"),
        (r#"{"interaction":"S","decorations":[{"symbol":"A","time":1}]}"#, "interaction"),
        (r#"{"suite":"nope"}"#, "suite"),
        (r#"{"extra":1}"#, "json"),
        ("[", "json"),
    ];
    for (text, why) in bad {
        let err = ScenarioConfig::from_json(text).unwrap_err();
        let matches = match why {
            "duplicate" => matches!(err, ScenarioError::DuplicateSymbol(_)),
            "symbol" => matches!(err, ScenarioError::BadSymbol(_)),
            "number" => matches!(err, ScenarioError::BadNumber { .. }),
            "interaction" => matches!(err, ScenarioError::UnknownInteraction(_)),
            "suite" => matches!(err, ScenarioError::Core(_)),
            _ => matches!(err, ScenarioError::Json(_)),
        };
        assert!(matches, "{text}: {err}");
    }
    let many: Vec<String> = (0..9).map(|k| format!(r#"{{"symbol":"X{k}","time":{k}}}"#)).collect();
    let text = format!(r#"{{"decorations":[{}]}}"#, many.join(","));
    assert!(matches!(ScenarioConfig::from_json(&text), Err(ScenarioError::TooManyDecorations(9))));
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_sigma");
    let code = |args: &[&str]| Process::new(bin).args(args).output().unwrap().status.code();
    assert_eq!(code(&["verify", "qbasis", "--n", "2"]), Some(0));
    assert_eq!(code(&["verify", "hopf", "--n", "7"]), Some(2));
    assert_eq!(code(&["frobnicate"]), Some(2));
}
