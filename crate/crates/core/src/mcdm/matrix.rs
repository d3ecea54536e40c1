use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub const WEIGHT_TOLERANCE: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Orientation {
    Benefit,
    Cost,
}

impl Orientation {
    /// Maps a raw value so that larger is always better.
    pub fn oriented(self, v: f64) -> f64 {
        match self {
            Orientation::Benefit => v,
            Orientation::Cost => -v,
        }
    }
}

impl fmt::Display for Orientation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Orientation::Benefit => f.write_str("benefit"),
            Orientation::Cost => f.write_str("cost"),
        }
    }
}

impl FromStr for Orientation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "benefit" => Ok(Orientation::Benefit),
            "cost" => Ok(Orientation::Cost),
            other => Err(Error::validation(format!(
                "orientation must be `benefit` or `cost`, got `{other}`"
            ))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Criterion {
    pub name: String,
    pub orientation: Orientation,
}

impl Criterion {
    pub fn benefit(name: impl Into<String>) -> Self {
        Self {
            name: name.into(),
            orientation: Orientation::Benefit,
        }
    }

    pub fn cost(name: impl Into<String>) -> Self {
        Self {
            name: name.into(),
            orientation: Orientation::Cost,
        }
    }
}

/// Alternatives × criteria performance table with criterion orientations and
/// a weight vector summing to one. Immutable once built.
#[derive(Debug, Clone, PartialEq)]
pub struct DecisionMatrix {
    alternatives: Vec<String>,
    criteria: Vec<Criterion>,
    values: Vec<Vec<f64>>,
    weights: Vec<f64>,
}

impl DecisionMatrix {
    pub fn new(
        alternatives: Vec<String>,
        criteria: Vec<Criterion>,
        values: Vec<Vec<f64>>,
        weights: Vec<f64>,
    ) -> Result<Self> {
        let (m, n) = (alternatives.len(), criteria.len());
        if m == 0 || n == 0 {
            return Err(Error::domain(
                "decision matrix needs at least one alternative and one criterion",
            ));
        }
        let mut ids = HashSet::new();
        for a in &alternatives {
            if !ids.insert(a.as_str()) {
                return Err(Error::domain(format!("duplicate alternative `{a}`")));
            }
        }
        let mut names = HashSet::new();
        for c in &criteria {
            if !names.insert(c.name.as_str()) {
                return Err(Error::domain(format!("duplicate criterion `{}`", c.name)));
            }
        }
        if values.len() != m {
            return Err(Error::domain(format!(
                "{} value rows for {m} alternatives",
                values.len()
            )));
        }
        for (a, row) in alternatives.iter().zip(&values) {
            if row.len() != n {
                return Err(Error::domain(format!(
                    "alternative `{a}` has {} values for {n} criteria",
                    row.len()
                )));
            }
            if let Some(j) = row.iter().position(|v| !v.is_finite()) {
                return Err(Error::domain(format!(
                    "alternative `{a}`, criterion `{}`: value is not finite",
                    criteria[j].name
                )));
            }
        }
        validate_weights(&weights, n)?;
        Ok(Self {
            alternatives,
            criteria,
            values,
            weights,
        })
    }

    /// All-benefit matrix with equal weights.
    pub fn uniform(alternatives: Vec<String>, criteria: Vec<String>, values: Vec<Vec<f64>>) -> Result<Self> {
        let n = criteria.len();
        let weights = vec![1.0 / n.max(1) as f64; n];
        let criteria = criteria.into_iter().map(Criterion::benefit).collect();
        Self::new(alternatives, criteria, values, weights)
    }

    pub fn alternatives(&self) -> &[String] {
        &self.alternatives
    }

    pub fn criteria(&self) -> &[Criterion] {
        &self.criteria
    }

    pub fn values(&self) -> &[Vec<f64>] {
        &self.values
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    pub fn n_alternatives(&self) -> usize {
        self.alternatives.len()
    }

    pub fn n_criteria(&self) -> usize {
        self.criteria.len()
    }

    pub fn value(&self, i: usize, j: usize) -> f64 {
        self.values[i][j]
    }

    pub fn column(&self, j: usize) -> impl Iterator<Item = f64> + '_ {
        self.values.iter().map(move |row| row[j])
    }

    /// Value `(i, j)` flipped so that larger is better.
    pub fn oriented(&self, i: usize, j: usize) -> f64 {
        self.criteria[j].orientation.oriented(self.values[i][j])
    }

    pub fn is_benefit(&self, j: usize) -> bool {
        self.criteria[j].orientation == Orientation::Benefit
    }

    pub fn with_weights(&self, weights: Vec<f64>) -> Result<Self> {
        Self::new(
            self.alternatives.clone(),
            self.criteria.clone(),
            self.values.clone(),
            weights,
        )
    }

    /// Reorders rows so that row `k` of the result is row `order[k]` of `self`.
    pub fn permute_rows(&self, order: &[usize]) -> Result<Self> {
        let m = self.n_alternatives();
        let mut seen = vec![false; m];
        if order.len() != m || order.iter().any(|&i| i >= m || std::mem::replace(&mut seen[i], true)) {
            return Err(Error::domain("row order is not a permutation"));
        }
        Self::new(
            order.iter().map(|&i| self.alternatives[i].clone()).collect(),
            self.criteria.clone(),
            order.iter().map(|&i| self.values[i].clone()).collect(),
            self.weights.clone(),
        )
    }
}

pub(crate) fn validate_weights(weights: &[f64], n: usize) -> Result<()> {
    if weights.len() != n {
        return Err(Error::domain(format!(
            "{} weights for {n} criteria",
            weights.len()
        )));
    }
    if weights.iter().any(|w| !w.is_finite() || *w < 0.0) {
        return Err(Error::domain("weights must be finite and non-negative"));
    }
    let total: f64 = weights.iter().sum();
    if (total - 1.0).abs() > WEIGHT_TOLERANCE {
        return Err(Error::domain(format!("weights sum to {total}, expected 1")));
    }
    Ok(())
}
