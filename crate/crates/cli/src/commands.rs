use std::fs;
use std::path::{Path, PathBuf};

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::json;
use sigma_core::arrows::{arrow, cell_arrow, Direction};
use sigma_core::products::Trunc;
use sigma_core::setcomp::{compositions_with_bound, refinements, DEFAULT_COMPOSITION_BOUND};
use sigma_core::species::{SigElement, Symbol};
use sigma_core::verify::{run, run_scenario, Report, Suite, VerifyConfig};
use sigma_core::zie::{dynkin_element, enumerate_cells_with_bound, Cell, DEFAULT_CELL_BOUND};
use sigma_core::{Composition, FiniteSet, Label};

use crate::scenario::{Scenario, ScenarioConfig, ScenarioError};
use crate::{ArrowDirection, Cli, Command, ComputeExpr, EnumerateKind, EXIT_PASS, EXIT_USAGE, EXIT_VERIFY_FAIL};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] sigma_core::Error),

    #[error(transparent)]
    Scenario(#[from] ScenarioError),

    #[error("cannot read {path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },

    #[error("invalid JSON in {path}: {source}")]
    Json {
        path: PathBuf,
        source: serde_json::Error,
    },

    #[error("{0}")]
    Usage(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        EXIT_USAGE
    }
}

/// Text to print and the process exit code.
#[derive(Debug)]
pub struct Outcome {
    pub stdout: String,
    pub code: i32,
}

impl Outcome {
    fn pass(stdout: String) -> Self {
        Outcome { stdout, code: EXIT_PASS }
    }
}

pub fn execute(cli: &Cli) -> Result<Outcome, CliError> {
    match &cli.command {
        Command::Enumerate { kind, n, composition } => enumerate(cli, *kind, *n, composition.as_deref()),
        Command::Compute { expr } => compute(cli, expr),
        Command::Verify {
            suite,
            n,
            ng,
            nj,
            scenario,
        } => verify(cli, suite.as_deref(), *n, *ng, *nj, scenario.as_deref()),
    }
}

fn parse_composition(text: &str) -> Result<Composition, CliError> {
    Ok(text.parse::<Composition>()?)
}

fn read(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })
}

fn read_cell(path: &Path) -> Result<Cell, CliError> {
    serde_json::from_str(&read(path)?).map_err(|source| CliError::Json {
        path: path.to_path_buf(),
        source,
    })
}

fn listing<T: std::fmt::Display + serde::Serialize>(
    cli: &Cli,
    kind: &str,
    items: &[T],
    extra: serde_json::Value,
) -> Result<String, CliError> {
    if cli.json {
        let mut v = json!({ "kind": kind, "count": items.len(), "items": items });
        if let (Some(obj), serde_json::Value::Object(more)) = (v.as_object_mut(), extra) {
            obj.extend(more);
        }
        return Ok(v.to_string());
    }
    let mut out: Vec<String> = items.iter().map(ToString::to_string).collect();
    out.push(format!("count {}", items.len()));
    Ok(out.join("\n"))
}

fn require_n(n: Option<usize>, kind: &str) -> Result<usize, CliError> {
    n.ok_or_else(|| CliError::Usage(format!("enumerate {kind} needs --n")))
}

fn enumerate(cli: &Cli, kind: EnumerateKind, n: Option<usize>, composition: Option<&str>) -> Result<Outcome, CliError> {
    let seed = cli.seed.unwrap_or(0);
    let text = match kind {
        EnumerateKind::Compositions => {
            let n = require_n(n, "compositions")?;
            let bound = cli.bound_override.unwrap_or(DEFAULT_COMPOSITION_BOUND);
            let items: Vec<Composition> = compositions_with_bound(&FiniteSet::range(n as u32), bound)?.collect();
            listing(cli, "compositions", &items, json!({ "n": n }))?
        }
        EnumerateKind::Cells => {
            let n = require_n(n, "cells")?;
            let bound = cli.bound_override.unwrap_or(DEFAULT_CELL_BOUND);
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let items = enumerate_cells_with_bound(&FiniteSet::range(n as u32), bound, &mut rng)?;
            listing(cli, "cells", &items, json!({ "n": n, "seed": seed }))?
        }
        EnumerateKind::Refinements => {
            let text = composition.ok_or_else(|| CliError::Usage("enumerate refinements needs a composition".into()))?;
            let f = parse_composition(text)?;
            let bound = cli.bound_override.unwrap_or(DEFAULT_COMPOSITION_BOUND);
            if f.ground().len() > bound {
                return Err(sigma_core::Error::BoundExceeded {
                    what: "refinement enumeration",
                    size: f.ground().len(),
                    bound,
                }
                .into());
            }
            let items: Vec<Composition> = refinements(&f).collect();
            listing(cli, "refinements", &items, json!({ "of": f }))?
        }
    };
    Ok(Outcome::pass(text))
}

fn element_output(cli: &Cli, a: &SigElement) -> Result<String, CliError> {
    if cli.json {
        Ok(serde_json::to_string(a).expect("elements serialize"))
    } else {
        Ok(format!("{a}\nterms {}", a.len()))
    }
}

fn check_size(cli: &Cli, ground: &FiniteSet) -> Result<(), CliError> {
    let bound = cli.bound_override.unwrap_or(DEFAULT_COMPOSITION_BOUND);
    if ground.len() > bound {
        return Err(sigma_core::Error::BoundExceeded {
            what: "composition size",
            size: ground.len(),
            bound,
        }
        .into());
    }
    Ok(())
}

fn compute(cli: &Cli, expr: &ComputeExpr) -> Result<Outcome, CliError> {
    let text = match expr {
        ComputeExpr::Antipode { composition } => {
            let f = parse_composition(composition)?;
            check_size(cli, &f.ground())?;
            element_output(cli, &SigElement::basis(f).antipode())?
        }
        ComputeExpr::Qbasis { composition } => {
            let f = parse_composition(composition)?;
            check_size(cli, &f.ground())?;
            element_output(cli, &SigElement::q_basis(f))?
        }
        ComputeExpr::Dynkin { cell } => {
            let d = dynkin_element(&read_cell(cell)?).into_sig();
            element_output(cli, &d)?
        }
        ComputeExpr::SteinmannArrow {
            composition,
            cell,
            star,
            dir,
        } => {
            let star: Label = star.parse()?;
            let dir = match dir {
                ArrowDirection::Retarded => Direction::Retarded,
                ArrowDirection::Advanced => Direction::Advanced,
            };
            match (composition, cell) {
                (Some(text), None) => {
                    let f = parse_composition(text)?;
                    check_size(cli, &f.ground())?;
                    element_output(cli, &arrow(&SigElement::basis(f), &star, dir)?)?
                }
                (None, Some(path)) => {
                    let moved = cell_arrow(&read_cell(path)?, &star, dir)?;
                    if cli.json {
                        serde_json::to_string(&moved).expect("cells serialize")
                    } else {
                        format!("{moved}\n{}", dynkin_element(&moved).as_sig())
                    }
                }
                _ => {
                    return Err(CliError::Usage(
                        "steinmann-arrow takes either a composition or --cell".into(),
                    ))
                }
            }
        }
        ComputeExpr::Tits { left, right } => {
            let (f, g) = (parse_composition(left)?, parse_composition(right)?);
            let fg = f.tits(&g)?;
            if cli.json {
                serde_json::to_string(&fg).expect("compositions serialize")
            } else {
                fg.to_string()
            }
        }
    };
    Ok(Outcome::pass(text))
}

fn verify(
    cli: &Cli,
    suite: Option<&str>,
    n: Option<usize>,
    ng: Option<u32>,
    nj: Option<u32>,
    scenario: Option<&Path>,
) -> Result<Outcome, CliError> {
    let scenario: Option<Scenario> = match scenario {
        Some(p) => Some(ScenarioConfig::from_json(&read(p)?)?),
        None => None,
    };
    let from_file = scenario.as_ref().map(|s| &s.config);
    let suite = match (suite, scenario.as_ref().and_then(|s| s.suite)) {
        (Some(name), _) => name.parse::<Suite>()?,
        (None, Some(s)) => s,
        (None, None) => return Err(CliError::Usage("verify needs a suite".into())),
    };
    let config = VerifyConfig {
        n: n.or(from_file.and_then(|c| c.n)).unwrap_or(suite.default_n()),
        ng: ng.or(from_file.and_then(|c| c.ng)).unwrap_or(3),
        nj: nj.or(from_file.and_then(|c| c.nj)).unwrap_or(3),
        seed: cli.seed.or(from_file.and_then(|c| c.seed)).unwrap_or(0),
        bound: cli.bound_override,
    };
    let report = match &scenario {
        Some(s) if !s.config.decorations.is_empty() && matches!(suite, Suite::Products | Suite::Scattering) => {
            let interaction = s.interaction().unwrap_or_else(|| Symbol::from(""));
            if suite == Suite::Scattering && s.config.interaction.is_none() {
                return Err(CliError::Usage("a scattering scenario needs an interaction".into()));
            }
            let model = s.model(Trunc::new(config.ng, 0));
            let labelled = if suite == Suite::Products { s.decorations() } else { s.externals() };
            run_scenario(suite, &config, &model, &interaction, &labelled, &s.character)?
        }
        _ => run(suite, &config)?,
    };
    Ok(report_outcome(cli, &report))
}

fn report_outcome(cli: &Cli, report: &Report) -> Outcome {
    let stdout = if cli.json {
        serde_json::to_string(report).expect("reports serialize")
    } else {
        report.to_string()
    };
    let code = if report.all_pass() { EXIT_PASS } else { EXIT_VERIFY_FAIL };
    Outcome { stdout, code }
}
