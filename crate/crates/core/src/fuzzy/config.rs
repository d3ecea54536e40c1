use std::path::Path;

use serde::{Deserialize, Serialize};

use super::membership::TrapezoidalSet;
use super::rules::{ResolvedRules, RuleBase};
use super::variable::{LinguisticVariable, Term};
use crate::error::{Error, Result};

pub const DEFAULT_DEFUZZ_RESOLUTION: usize = 10_001;

pub const LIKELIHOOD_LABELS: [&str; 5] =
    ["Very unlikely", "Unlikely", "Medium", "Likely", "Very likely"];
pub const IMPACT_LABELS: [&str; 5] = ["Low", "Low-Medium", "Medium", "Medium-High", "High"];
pub const RISK_LABELS: [&str; 4] = ["Low", "Medium", "High", "Critical"];

/// Likelihood partition: crossovers at 0.26, 0.45, 0.66, 0.88 with 0.05 half-overlap.
const LIKELIHOOD_SETS: [[f64; 4]; 5] = [
    [0.00, 0.00, 0.21, 0.31],
    [0.21, 0.31, 0.40, 0.50],
    [0.40, 0.50, 0.61, 0.71],
    [0.61, 0.71, 0.83, 0.93],
    [0.83, 0.93, 1.00, 1.00],
];

/// Impact partition: crossovers at 0.20, 0.45, 0.65, 0.87 with 0.05 half-overlap.
const IMPACT_SETS: [[f64; 4]; 5] = [
    [0.00, 0.00, 0.15, 0.25],
    [0.15, 0.25, 0.40, 0.50],
    [0.40, 0.50, 0.60, 0.70],
    [0.60, 0.70, 0.82, 0.92],
    [0.82, 0.92, 1.00, 1.00],
];

const RISK_SETS: [[f64; 4]; 4] = [
    [0.00, 0.00, 0.25, 0.40],
    [0.25, 0.40, 0.45, 0.55],
    [0.45, 0.55, 0.70, 0.80],
    [0.70, 0.85, 1.00, 1.00],
];

/// Complete Mamdani system description: three linguistic variables, the
/// rule base over them and the centroid sampling resolution.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "RawConfig", into = "RawConfig")]
pub struct FisConfig {
    likelihood: LinguisticVariable,
    impact: LinguisticVariable,
    risk: LinguisticVariable,
    rulebase: RuleBase,
    defuzz_resolution: usize,
    resolved: ResolvedRules,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawConfig {
    likelihood: LinguisticVariable,
    impact: LinguisticVariable,
    risk: LinguisticVariable,
    rules: RuleBase,
    #[serde(default = "default_resolution")]
    defuzz_resolution: usize,
}

fn default_resolution() -> usize {
    DEFAULT_DEFUZZ_RESOLUTION
}

impl TryFrom<RawConfig> for FisConfig {
    type Error = Error;

    fn try_from(raw: RawConfig) -> Result<Self> {
        FisConfig::new(
            raw.likelihood,
            raw.impact,
            raw.risk,
            raw.rules,
            raw.defuzz_resolution,
        )
    }
}

impl From<FisConfig> for RawConfig {
    fn from(c: FisConfig) -> Self {
        RawConfig {
            likelihood: c.likelihood,
            impact: c.impact,
            risk: c.risk,
            rules: c.rulebase,
            defuzz_resolution: c.defuzz_resolution,
        }
    }
}

impl FisConfig {
    pub fn new(
        likelihood: LinguisticVariable,
        impact: LinguisticVariable,
        risk: LinguisticVariable,
        rulebase: RuleBase,
        defuzz_resolution: usize,
    ) -> Result<Self> {
        if risk.len() != 4 {
            return Err(Error::validation(format!(
                "risk variable must have 4 terms (Low, Medium, High, Critical), found {}",
                risk.len()
            )));
        }
        if defuzz_resolution < 2 {
            return Err(Error::validation(
                "defuzz_resolution must be at least 2 samples",
            ));
        }
        let resolved = rulebase.resolve(&likelihood, &impact, &risk)?;
        Ok(Self {
            likelihood,
            impact,
            risk,
            rulebase,
            defuzz_resolution,
            resolved,
        })
    }

    pub fn likelihood(&self) -> &LinguisticVariable {
        &self.likelihood
    }

    pub fn impact(&self) -> &LinguisticVariable {
        &self.impact
    }

    pub fn risk(&self) -> &LinguisticVariable {
        &self.risk
    }

    pub fn rulebase(&self) -> &RuleBase {
        &self.rulebase
    }

    pub fn defuzz_resolution(&self) -> usize {
        self.defuzz_resolution
    }

    /// Consequent risk-term index for each (likelihood, impact) term pair.
    pub fn rule_table(&self) -> &[Vec<usize>] {
        &self.resolved.table
    }

    pub fn with_rulebase(&self, rulebase: RuleBase) -> Result<Self> {
        FisConfig::new(
            self.likelihood.clone(),
            self.impact.clone(),
            self.risk.clone(),
            rulebase,
            self.defuzz_resolution,
        )
    }

    pub fn with_resolution(&self, defuzz_resolution: usize) -> Result<Self> {
        FisConfig::new(
            self.likelihood.clone(),
            self.impact.clone(),
            self.risk.clone(),
            self.rulebase.clone(),
            defuzz_resolution,
        )
    }

    pub fn from_json(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("config serializes")
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
        Self::from_json(&text).map_err(|e| e.in_file(path))
    }
}

fn variable<const N: usize>(name: &str, labels: [&str; N], sets: [[f64; 4]; N]) -> LinguisticVariable {
    let terms = labels
        .iter()
        .zip(sets)
        .map(|(l, [a, b, c, d])| {
            Term::new(*l, TrapezoidalSet::new(a, b, c, d).expect("static breakpoints"))
        })
        .collect();
    LinguisticVariable::new(name, terms).expect("static variable")
}

/// The built-in membership profile with the standard 25-rule table.
pub fn default_config() -> FisConfig {
    let likelihood = variable("likelihood", LIKELIHOOD_LABELS, LIKELIHOOD_SETS);
    let impact = variable("impact", IMPACT_LABELS, IMPACT_SETS);
    let risk = variable("risk", RISK_LABELS, RISK_SETS);
    let rulebase = RuleBase::standard(&likelihood, &impact, &risk);
    FisConfig::new(likelihood, impact, risk, rulebase, DEFAULT_DEFUZZ_RESOLUTION)
        .expect("default config is valid")
}
