use std::time::Instant;

use sigma_core::verify::{run, Suite, VerifyConfig};
use sigma_core::Error;

#[test]
fn every_suite_passes_at_default_size() {
    for suite in Suite::ALL {
        let config = VerifyConfig::new(suite.default_n());
        let start = Instant::now();
        let report = run(suite, &config).unwrap();
        println!("{report}\n  ({:.2?})", start.elapsed());
        assert!(report.all_pass(), "{report}");
    }
}

#[test]
fn suites_parse_by_name() {
    for suite in Suite::ALL {
        assert_eq!(suite.name().parse::<Suite>().unwrap(), suite);
    }
    assert!("hopff".parse::<Suite>().is_err());
}

#[test]
fn bounds_are_enforced() {
    let config = VerifyConfig::new(9);
    assert!(matches!(run(Suite::Hopf, &config), Err(Error::BoundExceeded { .. })));
    let mut config = VerifyConfig::new(2);
    config.ng = 9;
    assert!(matches!(run(Suite::Bogoliubov, &config), Err(Error::BoundExceeded { .. })));
}

#[test]
fn report_json_lists_checks() {
    let report = run(Suite::Hopf, &VerifyConfig::new(2)).unwrap();
    let json = serde_json::to_value(&report).unwrap();
    assert_eq!(json["suite"], "hopf");
    let names: Vec<&str> = json["checks"].as_array().unwrap().iter().map(|c| c["name"].as_str().unwrap()).collect();
    assert!(names.contains(&"bimonoid compatibility"));
    assert!(names.contains(&"coassociativity"));
}
