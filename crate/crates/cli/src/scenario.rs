//! Scenario files: a toy causal model plus verification settings.
//!
//! ```json
//! {"n": 3, "ng": 2, "nj": 2, "seed": 7, "suite": "scattering",
//!  "interaction": "S",
//!  "decorations": [{"symbol": "S", "time": 0, "character": "2"},
//!                  {"symbol": "A", "time": "5/2", "character": "-1"}]}
//! ```

use std::collections::BTreeSet;

use num_rational::BigRational;
use serde::Deserialize;
use sigma_core::products::{Character, Registry, ToyModel, Trunc};
use sigma_core::species::{Assignment, Symbol};
use sigma_core::verify::Suite;
use sigma_core::{Label, Scalar};

/// Largest number of decorations a scenario may declare.
pub const MAX_DECORATIONS: usize = 8;
/// Longest accepted decoration symbol.
pub const MAX_SYMBOL_LEN: usize = 32;

#[derive(Debug, thiserror::Error)]
pub enum ScenarioError {
    #[error("scenario is not valid JSON: {0}")]
    Json(#[from] serde_json::Error),

    #[error("scenario declares {0} decorations, at most {MAX_DECORATIONS} are allowed")]
    TooManyDecorations(usize),

    #[error("invalid decoration symbol {0:?}")]
    BadSymbol(String),

    #[error("decoration symbol {0:?} declared twice")]
    DuplicateSymbol(String),

    #[error("invalid {what} for {symbol:?}: {value:?}")]
    BadNumber {
        what: &'static str,
        symbol: String,
        value: String,
    },

    #[error("interaction symbol {0:?} is not among the decorations")]
    UnknownInteraction(String),

    #[error(transparent)]
    Core(#[from] sigma_core::Error),
}

/// A time or character value: a JSON integer or a rational in a string.
#[derive(Clone, Debug, Deserialize, PartialEq)]
#[serde(untagged)]
pub enum Number {
    Int(i64),
    Text(String),
}

impl Number {
    fn text(&self) -> String {
        match self {
            Number::Int(v) => v.to_string(),
            Number::Text(s) => s.clone(),
        }
    }
}

#[derive(Clone, Debug, Deserialize, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct Decoration {
    pub symbol: String,
    pub time: Number,
    #[serde(default)]
    pub character: Option<Number>,
}

#[derive(Clone, Debug, Default, Deserialize, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct ScenarioConfig {
    pub n: Option<usize>,
    pub ng: Option<u32>,
    pub nj: Option<u32>,
    pub seed: Option<u64>,
    pub suite: Option<String>,
    pub interaction: Option<String>,
    #[serde(default)]
    pub decorations: Vec<Decoration>,
}

/// A scenario with every value parsed.
#[derive(Clone, Debug)]
pub struct Scenario {
    pub config: ScenarioConfig,
    pub suite: Option<Suite>,
    pub registry: Registry,
    pub character: Character,
}

impl ScenarioConfig {
    pub fn from_json(text: &str) -> Result<Scenario, ScenarioError> {
        let config: ScenarioConfig = serde_json::from_str(text)?;
        config.validate()
    }

    pub fn validate(self) -> Result<Scenario, ScenarioError> {
        if self.decorations.len() > MAX_DECORATIONS {
            return Err(ScenarioError::TooManyDecorations(self.decorations.len()));
        }
        let suite = self.suite.as_deref().map(str::parse::<Suite>).transpose()?;
        let mut seen = BTreeSet::new();
        let mut registry = Registry::new();
        let mut values = Vec::new();
        for d in &self.decorations {
            let ok = !d.symbol.is_empty()
                && d.symbol.len() <= MAX_SYMBOL_LEN
                && d.symbol.chars().all(|c| c.is_alphanumeric() || c == '_');
            if !ok {
                return Err(ScenarioError::BadSymbol(d.symbol.clone()));
            }
            if !seen.insert(d.symbol.clone()) {
                return Err(ScenarioError::DuplicateSymbol(d.symbol.clone()));
            }
            let text = d.time.text();
            let time: BigRational = text.parse().map_err(|_| ScenarioError::BadNumber {
                what: "time",
                symbol: d.symbol.clone(),
                value: text.clone(),
            })?;
            registry.insert(&d.symbol, time)?;
            if let Some(c) = &d.character {
                let text = c.text();
                let value: Scalar = text.parse().map_err(|_| ScenarioError::BadNumber {
                    what: "character value",
                    symbol: d.symbol.clone(),
                    value: text.clone(),
                })?;
                values.push((d.symbol.clone(), value));
            }
        }
        if let Some(s) = &self.interaction {
            if !seen.contains(s) {
                return Err(ScenarioError::UnknownInteraction(s.clone()));
            }
        }
        Ok(Scenario {
            config: self,
            suite,
            registry,
            character: Character::new(values),
        })
    }
}

impl Scenario {
    pub fn model(&self, trunc: Trunc) -> ToyModel {
        ToyModel::new(self.registry.clone(), trunc)
    }

    pub fn interaction(&self) -> Option<Symbol> {
        self.config.interaction.as_deref().map(Symbol::from)
    }

    /// Every decoration on labels `1, 2, ...` in file order.
    pub fn decorations(&self) -> Assignment {
        self.labelled(|_| true)
    }

    /// Every decoration other than the interaction, labelled as above.
    pub fn externals(&self) -> Assignment {
        let interaction = self.config.interaction.as_deref();
        self.labelled(|s| Some(s) != interaction)
    }

    fn labelled(&self, keep: impl Fn(&str) -> bool) -> Assignment {
        Assignment::from_pairs(
            self.config
                .decorations
                .iter()
                .filter(|d| keep(&d.symbol))
                .enumerate()
                .map(|(k, d)| (Label::Int(k as u32 + 1), d.symbol.as_str())),
        )
    }
}
