//! Categorical answer distributions and the seeded synthetic questionnaire
//! generator.
//!
//! # Random streams
//!
//! Every question owns an independent ChaCha8 stream: the generator is
//! seeded with `seed` and switched to stream number `question`, where the
//! questions are numbered
//!
//! * `0..5` — section 1 criteria, in criterion order;
//! * `5 + 5·risk + criterion` — risk ratings (`5..85`);
//! * `85 + 5·likelihood + impact` — rule cells (`85..110`).
//!
//! Experts draw from each stream in order, so adding experts only appends
//! draws and never changes the answers of earlier experts.

use std::collections::BTreeMap;
use std::path::Path;

use rand::distributions::{Distribution, WeightedIndex};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::questionnaire::{Questionnaire, RuleTable, N_CRITERIA, N_RISKS};
use super::registry::{CRITERIA, RISKS};
use crate::error::{Error, Result};
use crate::fuzzy::rules::STANDARD_RULE_TABLE;

/// Probabilities of ratings 1..=5.
pub type Categorical = [f64; 5];

/// Chance that a generated rule cell deviates from the standard table.
pub const RULE_MUTATION_PROBABILITY: f64 = 0.1;

const PROB_TOLERANCE: f64 = 1e-9;

#[derive(Debug, Clone, PartialEq)]
pub struct DistributionSpec {
    criteria: [Categorical; N_CRITERIA],
    risks: [[Categorical; N_CRITERIA]; N_RISKS],
}

fn check_categorical(p: &Categorical, question: &str) -> Result<()> {
    if p.iter().any(|v| !v.is_finite() || *v < 0.0) {
        return Err(Error::validation(format!(
            "{question}: probabilities must be finite and non-negative"
        )));
    }
    let total: f64 = p.iter().sum();
    if (total - 1.0).abs() > PROB_TOLERANCE {
        return Err(Error::validation(format!("{question}: probabilities sum to {total}")));
    }
    Ok(())
}

impl DistributionSpec {
    pub fn new(criteria: [Categorical; N_CRITERIA], risks: [[Categorical; N_CRITERIA]; N_RISKS]) -> Result<Self> {
        for (c, p) in CRITERIA.iter().zip(&criteria) {
            check_categorical(p, c)?;
        }
        for (risk, row) in RISKS.iter().zip(&risks) {
            for (c, p) in CRITERIA.iter().zip(row) {
                check_categorical(p, &format!("{}/{c}", risk.code))?;
            }
        }
        Ok(Self { criteria, risks })
    }

    /// Every question uniform over 1..=5.
    pub fn uniform() -> Self {
        let u = [0.2; 5];
        Self {
            criteria: [u; N_CRITERIA],
            risks: [[u; N_CRITERIA]; N_RISKS],
        }
    }

    pub fn criterion(&self, c: usize) -> &Categorical {
        &self.criteria[c]
    }

    pub fn risk(&self, r: usize, c: usize) -> &Categorical {
        &self.risks[r][c]
    }

    /// All 85 questions with their identifiers (`Impact`, `RM3/Exposure`).
    pub fn questions(&self) -> Vec<(String, &Categorical)> {
        let mut out: Vec<(String, &Categorical)> =
            CRITERIA.iter().zip(&self.criteria).map(|(c, p)| (c.to_string(), p)).collect();
        for (risk, row) in RISKS.iter().zip(&self.risks) {
            for (c, p) in CRITERIA.iter().zip(row) {
                out.push((format!("{}/{c}", risk.code), p));
            }
        }
        out
    }

    /// Largest per-question total-variation distance to `other`.
    pub fn max_total_variation(&self, other: &DistributionSpec) -> f64 {
        self.questions()
            .iter()
            .zip(other.questions())
            .map(|((_, p), (_, q))| total_variation(p, q))
            .fold(0.0, f64::max)
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let raw: RawSpec = serde_json::from_str(text)?;
        let mut criteria = [[0.0; 5]; N_CRITERIA];
        for (slot, c) in criteria.iter_mut().zip(CRITERIA) {
            *slot = *raw
                .criteria_ratings
                .get(c)
                .ok_or_else(|| Error::validation(format!("spec is missing criterion {c}")))?;
        }
        if let Some(k) = raw.criteria_ratings.keys().find(|k| !CRITERIA.contains(&k.as_str())) {
            return Err(Error::validation(format!("spec names unknown criterion `{k}`")));
        }
        if let Some(k) = raw.risk_ratings.keys().find(|k| !RISKS.iter().any(|r| r.code == k.as_str())) {
            return Err(Error::validation(format!("spec names unknown risk `{k}`")));
        }
        let mut risks = [[[0.0; 5]; N_CRITERIA]; N_RISKS];
        for (slots, risk) in risks.iter_mut().zip(&RISKS) {
            let row = raw.risk_ratings.get(risk.code);
            for (slot, c) in slots.iter_mut().zip(CRITERIA) {
                *slot = *row.and_then(|m| m.get(c)).ok_or_else(|| {
                    Error::validation(format!("spec is missing {}/{c}", risk.code))
                })?;
            }
            if let Some(k) = row.and_then(|m| m.keys().find(|k| !CRITERIA.contains(&k.as_str()))) {
                return Err(Error::validation(format!("spec names unknown criterion `{k}` for {}", risk.code)));
            }
        }
        Self::new(criteria, risks)
    }

    pub fn to_json(&self) -> String {
        let raw = RawSpec {
            criteria_ratings: CRITERIA.iter().map(|c| c.to_string()).zip(self.criteria).collect(),
            risk_ratings: RISKS
                .iter()
                .zip(&self.risks)
                .map(|(risk, row)| {
                    (risk.code.to_string(), CRITERIA.iter().map(|c| c.to_string()).zip(*row).collect())
                })
                .collect(),
        };
        serde_json::to_string_pretty(&raw).expect("spec serializes") + "\n"
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
        Self::from_json(&text).map_err(|e| e.in_file(path))
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawSpec {
    criteria_ratings: BTreeMap<String, Categorical>,
    risk_ratings: BTreeMap<String, BTreeMap<String, Categorical>>,
}

pub fn total_variation(p: &Categorical, q: &Categorical) -> f64 {
    0.5 * p.iter().zip(q).map(|(a, b)| (a - b).abs()).sum::<f64>()
}

fn smoothed(counts: [usize; 5]) -> Categorical {
    let total = counts.iter().sum::<usize>() as f64 + 5.0;
    counts.map(|c| (c as f64 + 1.0) / total)
}

/// Empirical rating frequencies per question, with add-one smoothing.
pub fn fit_distributions(q: &Questionnaire) -> DistributionSpec {
    let count = |get: &dyn Fn(usize) -> u8| {
        let mut c = [0usize; 5];
        for e in 0..q.n_experts() {
            c[usize::from(get(e)) - 1] += 1;
        }
        smoothed(c)
    };
    let criteria = std::array::from_fn(|c| count(&|e| q.criteria_rating(e, c)));
    let risks = std::array::from_fn(|r| std::array::from_fn(|c| count(&|e| q.risk_rating(e, r, c))));
    DistributionSpec { criteria, risks }
}

fn stream(seed: u64, question: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(question);
    rng
}

fn draw_all(seed: u64, question: u64, p: &Categorical, n: usize) -> Vec<u8> {
    let mut rng = stream(seed, question);
    let dist = WeightedIndex::new(p).expect("validated categorical");
    (0..n).map(|_| dist.sample(&mut rng) as u8 + 1).collect()
}

/// Draws `n_experts` questionnaires. Expert identifiers are `1..=n`.
pub fn generate_synthetic(spec: &DistributionSpec, n_experts: usize, seed: u64) -> Result<Questionnaire> {
    if n_experts == 0 {
        return Err(Error::domain("at least one expert is required"));
    }
    let mut criteria = vec![[0u8; N_CRITERIA]; n_experts];
    for c in 0..N_CRITERIA {
        for (e, v) in draw_all(seed, c as u64, &spec.criteria[c], n_experts).into_iter().enumerate() {
            criteria[e][c] = v;
        }
    }
    let mut risks = vec![[[0u8; N_CRITERIA]; N_RISKS]; n_experts];
    for r in 0..N_RISKS {
        for c in 0..N_CRITERIA {
            let q = (N_CRITERIA + N_CRITERIA * r + c) as u64;
            for (e, v) in draw_all(seed, q, &spec.risks[r][c], n_experts).into_iter().enumerate() {
                risks[e][r][c] = v;
            }
        }
    }
    let first_rule_stream = (N_CRITERIA * (N_RISKS + 1)) as u64;
    let mut rules: Vec<RuleTable> = vec![STANDARD_RULE_TABLE; n_experts];
    for li in 0..5 {
        for ii in 0..5 {
            let mut rng = stream(seed, first_rule_stream + (5 * li + ii) as u64);
            for table in rules.iter_mut() {
                // Both draws are always taken so every expert consumes the
                // same amount of the stream.
                let mutate = rng.gen_bool(RULE_MUTATION_PROBABILITY);
                let up = rng.gen_bool(0.5);
                if mutate {
                    table[li][ii] = adjacent_level(STANDARD_RULE_TABLE[li][ii], up);
                }
            }
        }
    }
    Questionnaire::new(
        (1..=n_experts).map(|i| i.to_string()).collect(),
        criteria,
        risks,
        rules,
    )
}

/// One severity step up or down; at either end the only neighbour is used.
fn adjacent_level(level: usize, up: bool) -> usize {
    match (level, up) {
        (0, _) => 1,
        (3, _) => 2,
        (l, true) => l + 1,
        (l, false) => l - 1,
    }
}
