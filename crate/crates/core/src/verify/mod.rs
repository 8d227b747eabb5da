//! Exhaustive and seeded invariant checks, grouped into named suites.
//!
//! A suite never fails with an error because an invariant is violated; the
//! violation is counted in the [`Report`]. Errors are reserved for requests
//! outside the configured bounds and for malformed input.

mod algebra;
mod arrows;
mod lie;
mod products;

pub use algebra::COMPOSITION_COUNTS;
pub use lie::{four_point_example, CELL_COUNTS, ZIE_DIMENSIONS};

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::products::{Character, ToyModel, DEFAULT_ORDER_BOUND};
use crate::species::{Assignment, Symbol};

/// Largest `n` a suite accepts without an explicit override.
pub const DEFAULT_VERIFY_BOUND: usize = 5;

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Hopf,
    Qbasis,
    Dynkin,
    Steinmann,
    Ruelle,
    Arrows,
    Products,
    Bogoliubov,
    Scattering,
}

impl Suite {
    pub const ALL: [Suite; 9] = [
        Suite::Hopf,
        Suite::Qbasis,
        Suite::Dynkin,
        Suite::Steinmann,
        Suite::Ruelle,
        Suite::Arrows,
        Suite::Products,
        Suite::Bogoliubov,
        Suite::Scattering,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Hopf => "hopf",
            Suite::Qbasis => "qbasis",
            Suite::Dynkin => "dynkin",
            Suite::Steinmann => "steinmann",
            Suite::Ruelle => "ruelle",
            Suite::Arrows => "arrows",
            Suite::Products => "products",
            Suite::Bogoliubov => "bogoliubov",
            Suite::Scattering => "scattering",
        }
    }

    /// The `n` used when none is given.
    pub fn default_n(self) -> usize {
        match self {
            Suite::Hopf | Suite::Dynkin | Suite::Steinmann | Suite::Ruelle => 4,
            Suite::Qbasis => 4,
            Suite::Arrows | Suite::Products | Suite::Scattering => 3,
            Suite::Bogoliubov => 1,
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Suite> {
        Suite::ALL
            .into_iter()
            .find(|suite| suite.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown suite {s:?}")))
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub struct VerifyConfig {
    pub n: usize,
    pub ng: u32,
    pub nj: u32,
    pub seed: u64,
    /// Raises the size bound; `None` keeps [`DEFAULT_VERIFY_BOUND`] and
    /// [`DEFAULT_ORDER_BOUND`].
    pub bound: Option<usize>,
}

impl VerifyConfig {
    pub fn new(n: usize) -> Self {
        VerifyConfig {
            n,
            ng: 3,
            nj: 3,
            seed: 0,
            bound: None,
        }
    }

    fn check_bounds(&self) -> Result<()> {
        let bound = self.bound.unwrap_or(DEFAULT_VERIFY_BOUND);
        if self.n > bound {
            return Err(Error::BoundExceeded {
                what: "verify n",
                size: self.n,
                bound,
            });
        }
        let order_bound = self.bound.map_or(DEFAULT_ORDER_BOUND as usize, |b| b.max(DEFAULT_ORDER_BOUND as usize));
        for (what, v) in [("truncation order g", self.ng), ("truncation order j", self.nj)] {
            if v as usize > order_bound {
                return Err(Error::BoundExceeded {
                    what,
                    size: v as usize,
                    bound: order_bound,
                });
            }
        }
        Ok(())
    }
}

/// Pass and fail counters of one invariant.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: u64,
    pub failed: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub first_failure: Option<String>,
    /// Observed values of equality checks, in order.
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub values: Vec<String>,
}

impl Check {
    pub fn ok(&self) -> bool {
        self.failed == 0 && self.passed > 0
    }
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct Report {
    pub suite: Suite,
    pub config: VerifyConfig,
    pub checks: Vec<Check>,
}

impl Report {
    pub fn all_pass(&self) -> bool {
        !self.checks.is_empty() && self.checks.iter().all(Check::ok)
    }

    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "suite {} (n={}, Ng={}, Nj={}, seed={})", self.suite, self.config.n, self.config.ng, self.config.nj, self.config.seed)?;
        for c in &self.checks {
            let status = if c.ok() { "PASS" } else { "FAIL" };
            write!(f, "  {status} {}: {} passed, {} failed", c.name, c.passed, c.failed)?;
            if !c.values.is_empty() {
                write!(f, " [{}]", c.values.join(", "))?;
            }
            if let Some(why) = &c.first_failure {
                write!(f, " (first failure: {why})")?;
            }
            writeln!(f)?;
        }
        let verdict = if self.all_pass() { "PASS" } else { "FAIL" };
        write!(f, "{verdict} {}", self.suite)
    }
}

/// Accumulates checks in insertion order.
#[derive(Default)]
pub(crate) struct Tally {
    checks: Vec<Check>,
}

impl Tally {
    fn entry(&mut self, name: &str) -> &mut Check {
        if let Some(k) = self.checks.iter().position(|c| c.name == name) {
            return &mut self.checks[k];
        }
        self.checks.push(Check {
            name: name.to_string(),
            passed: 0,
            failed: 0,
            first_failure: None,
            values: Vec::new(),
        });
        self.checks.last_mut().unwrap()
    }

    pub(crate) fn record(&mut self, name: &str, ok: bool, context: impl FnOnce() -> String) {
        let c = self.entry(name);
        if ok {
            c.passed += 1;
        } else {
            c.failed += 1;
            if c.first_failure.is_none() {
                c.first_failure = Some(context());
            }
        }
    }

    /// Records a computation that may itself fail; an error counts as a failure.
    pub(crate) fn record_result(&mut self, name: &str, outcome: Result<bool>, context: impl FnOnce() -> String) {
        match outcome {
            Ok(ok) => self.record(name, ok, context),
            Err(e) => {
                let ctx = context();
                self.record(name, false, || format!("{ctx}: {e}"))
            }
        }
    }

    pub(crate) fn equal<T: PartialEq + fmt::Debug>(&mut self, name: &str, got: T, expected: T) {
        let ok = got == expected;
        self.entry(name).values.push(format!("{got:?}"));
        self.record(name, ok, || format!("got {got:?}, expected {expected:?}"));
    }

    fn finish(self, suite: Suite, config: VerifyConfig) -> Report {
        Report {
            suite,
            config,
            checks: self.checks,
        }
    }
}

/// Runs one suite.
pub fn run(suite: Suite, config: &VerifyConfig) -> Result<Report> {
    config.check_bounds()?;
    let mut t = Tally::default();
    match suite {
        Suite::Hopf => algebra::hopf(&mut t, config.n)?,
        Suite::Qbasis => algebra::qbasis(&mut t, config.n)?,
        Suite::Dynkin => lie::dynkin(&mut t, config)?,
        Suite::Steinmann => lie::steinmann(&mut t, config)?,
        Suite::Ruelle => lie::ruelle(&mut t, config)?,
        Suite::Arrows => arrows::arrows(&mut t, config)?,
        Suite::Products => products::products(&mut t, config)?,
        Suite::Bogoliubov => products::bogoliubov(&mut t, config)?,
        Suite::Scattering => products::scattering(&mut t, config)?,
    }
    Ok(t.finish(suite, *config))
}

/// Runs the model-dependent checks of `suite` on a supplied toy model.
///
/// `products` checks causal factorization over `decorations`; `scattering`
/// splits `decorations` around the interaction time. Other suites do not
/// depend on a model and fall back to [`run`].
pub fn run_scenario(
    suite: Suite,
    config: &VerifyConfig,
    model: &ToyModel,
    interaction: &Symbol,
    decorations: &Assignment,
    chi: &Character,
) -> Result<Report> {
    config.check_bounds()?;
    let mut t = Tally::default();
    match suite {
        Suite::Products => products::causal_scenario(&mut t, model, decorations)?,
        Suite::Scattering => products::scattering_scenario(&mut t, model, interaction, decorations, chi)?,
        _ => return run(suite, config),
    }
    Ok(t.finish(suite, *config))
}
