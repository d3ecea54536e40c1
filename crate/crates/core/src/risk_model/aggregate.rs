//! Collapsing expert answers into a decision matrix, FIS inputs, fuzzy
//! ratings and a consensus rule base.

use serde::{Deserialize, Serialize};

use super::questionnaire::{Questionnaire, RuleTable, N_CRITERIA, N_RISKS};
use super::registry::{risk_codes, CRITERIA, IMPACT_CRITERION, LIKELIHOOD_CRITERION, RISKS};
use crate::error::{Error, Result};
use crate::fuzzy::config::{IMPACT_LABELS, LIKELIHOOD_LABELS, RISK_LABELS};
use crate::fuzzy::{FuzzyRule, RuleBase};
use crate::mcdm::{Criterion, DecisionMatrix, FuzzyRating};
use crate::weighting::{likert_to_unit, WeightVector};

/// Crisp inputs for the fuzzy system, on the unit scale.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FisInput {
    pub code: String,
    pub likelihood: f64,
    pub impact: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Aggregation {
    /// 16 risks × 5 criteria of mean ratings (1..5), all benefit-oriented.
    pub matrix: DecisionMatrix,
    pub fis_inputs: Vec<FisInput>,
}

/// Arithmetic mean of every risk × criterion rating across experts.
pub fn mean_ratings(q: &Questionnaire) -> Vec<[f64; N_CRITERIA]> {
    let n = q.n_experts() as f64;
    (0..N_RISKS)
        .map(|r| {
            let mut row = [0.0; N_CRITERIA];
            for (c, cell) in row.iter_mut().enumerate() {
                let total: u32 = (0..q.n_experts()).map(|e| u32::from(q.risk_rating(e, r, c))).sum();
                *cell = f64::from(total) / n;
            }
            row
        })
        .collect()
}

/// Builds the risk decision matrix under `weights` (which must follow the
/// questionnaire's criterion order) and the per-risk FIS inputs
/// `mean Likelihood / 5`, `mean Impact / 5`.
pub fn aggregate_expert_ratings(q: &Questionnaire, weights: &WeightVector) -> Result<Aggregation> {
    if weights.criteria.iter().map(String::as_str).ne(CRITERIA) {
        return Err(Error::domain(format!(
            "weights must cover the criteria {CRITERIA:?} in order"
        )));
    }
    let means = mean_ratings(q);
    let matrix = DecisionMatrix::new(
        risk_codes(),
        CRITERIA.iter().map(|c| Criterion::benefit(*c)).collect(),
        means.iter().map(|r| r.to_vec()).collect(),
        weights.weights.clone(),
    )?;
    let fis_inputs = RISKS
        .iter()
        .zip(&means)
        .map(|(risk, row)| {
            Ok(FisInput {
                code: risk.code.to_string(),
                likelihood: likert_to_unit(row[LIKELIHOOD_CRITERION])?,
                impact: likert_to_unit(row[IMPACT_CRITERION])?,
            })
        })
        .collect::<Result<_>>()?;
    Ok(Aggregation { matrix, fis_inputs })
}

/// Trapezoidal rating `(min, mean, mean, max) / 5` of one criterion for
/// each risk, across experts.
pub fn fuzzy_ratings(q: &Questionnaire, criterion: usize) -> Vec<FuzzyRating> {
    (0..N_RISKS)
        .map(|r| {
            let vals: Vec<f64> = (0..q.n_experts())
                .map(|e| f64::from(q.risk_rating(e, r, criterion)) / 5.0)
                .collect();
            let lo = vals.iter().cloned().fold(f64::INFINITY, f64::min);
            let hi = vals.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
            let mean = (vals.iter().sum::<f64>() / vals.len() as f64).clamp(lo, hi);
            FuzzyRating::new(lo, mean, mean, hi).expect("ordered breakpoints in [0.2, 1]")
        })
        .collect()
}

/// Per-cell modal level across experts; ties go to the more severe level.
pub fn majority_table(q: &Questionnaire) -> RuleTable {
    let mut out = [[0; 5]; 5];
    for (li, row) in out.iter_mut().enumerate() {
        for (ii, cell) in row.iter_mut().enumerate() {
            let mut votes = [0usize; 4];
            for e in 0..q.n_experts() {
                votes[q.rule_table(e)[li][ii]] += 1;
            }
            // max_by_key keeps the last maximum, i.e. the most severe.
            *cell = (0..votes.len()).max_by_key(|&l| votes[l]).unwrap_or(0);
        }
    }
    out
}

pub fn majority_rulebase(q: &Questionnaire) -> RuleBase {
    rulebase_from_table(&majority_table(q))
}

pub fn rulebase_from_table(t: &RuleTable) -> RuleBase {
    let mut rules = Vec::with_capacity(25);
    for (li, row) in t.iter().enumerate() {
        for (ii, &lvl) in row.iter().enumerate() {
            rules.push(FuzzyRule::new(LIKELIHOOD_LABELS[li], IMPACT_LABELS[ii], RISK_LABELS[lvl]));
        }
    }
    RuleBase::new(rules)
}
