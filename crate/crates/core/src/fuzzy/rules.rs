use serde::{Deserialize, Serialize};

use super::variable::LinguisticVariable;
use crate::error::{Error, Result};

/// `IF likelihood is <term> AND impact is <term> THEN risk is <term>`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FuzzyRule {
    #[serde(rename = "if_likelihood")]
    pub likelihood_term: String,
    #[serde(rename = "if_impact")]
    pub impact_term: String,
    #[serde(rename = "then_risk")]
    pub risk_term: String,
}

impl FuzzyRule {
    pub fn new(
        likelihood: impl Into<String>,
        impact: impl Into<String>,
        risk: impl Into<String>,
    ) -> Self {
        Self {
            likelihood_term: likelihood.into(),
            impact_term: impact.into(),
            risk_term: risk.into(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct RuleBase {
    pub rules: Vec<FuzzyRule>,
}

/// Consequent severity index (0 = Low .. 3 = Critical) for each
/// (likelihood, impact) pair, rows = likelihood from least to most likely,
/// columns = impact from lowest to highest.
pub const STANDARD_RULE_TABLE: [[usize; 5]; 5] = [
    [0, 0, 0, 1, 1],
    [0, 0, 1, 1, 2],
    [0, 0, 1, 2, 2],
    [0, 1, 1, 2, 3],
    [0, 1, 2, 3, 3],
];

/// A rule base resolved to term indices of its three variables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ResolvedRules {
    /// `table[likelihood][impact]` is the consequent risk-term index.
    pub table: Vec<Vec<usize>>,
}

impl RuleBase {
    pub fn new(rules: Vec<FuzzyRule>) -> Self {
        Self { rules }
    }

    /// The standard 25-rule table expressed over the given variables' labels.
    pub fn standard(
        likelihood: &LinguisticVariable,
        impact: &LinguisticVariable,
        risk: &LinguisticVariable,
    ) -> Self {
        let lik: Vec<&str> = likelihood.labels().collect();
        let imp: Vec<&str> = impact.labels().collect();
        let lvl: Vec<&str> = risk.labels().collect();
        let mut rules = Vec::with_capacity(25);
        for (li, row) in STANDARD_RULE_TABLE.iter().enumerate() {
            for (ii, &ri) in row.iter().enumerate() {
                rules.push(FuzzyRule::new(lik[li], imp[ii], lvl[ri]));
            }
        }
        Self { rules }
    }

    pub fn len(&self) -> usize {
        self.rules.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rules.is_empty()
    }

    /// Checks every label and requires exactly one rule per antecedent pair.
    pub fn resolve(
        &self,
        likelihood: &LinguisticVariable,
        impact: &LinguisticVariable,
        risk: &LinguisticVariable,
    ) -> Result<ResolvedRules> {
        let mut table: Vec<Vec<Option<usize>>> = vec![vec![None; impact.len()]; likelihood.len()];
        for (n, rule) in self.rules.iter().enumerate() {
            let li = lookup(likelihood, &rule.likelihood_term, n)?;
            let ii = lookup(impact, &rule.impact_term, n)?;
            let ri = lookup(risk, &rule.risk_term, n)?;
            if table[li][ii].replace(ri).is_some() {
                return Err(Error::validation(format!(
                    "rule {}: duplicate antecedent ({}, {})",
                    n + 1,
                    rule.likelihood_term,
                    rule.impact_term
                )));
            }
        }
        let mut out = Vec::with_capacity(likelihood.len());
        for (li, row) in table.into_iter().enumerate() {
            let mut resolved = Vec::with_capacity(row.len());
            for (ii, cell) in row.into_iter().enumerate() {
                match cell {
                    Some(r) => resolved.push(r),
                    None => {
                        return Err(Error::validation(format!(
                            "rule base has no rule for ({}, {})",
                            likelihood.terms()[li].label,
                            impact.terms()[ii].label
                        )))
                    }
                }
            }
            out.push(resolved);
        }
        Ok(ResolvedRules { table: out })
    }
}

fn lookup(var: &LinguisticVariable, label: &str, rule_no: usize) -> Result<usize> {
    var.index_of(label).ok_or_else(|| {
        Error::validation(format!(
            "rule {}: unknown {} term `{label}`",
            rule_no + 1,
            var.name()
        ))
    })
}
