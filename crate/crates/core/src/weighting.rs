//! Criteria weights from expert importance ratings.
//!
//! Each criterion is treated as an alternative and each expert as an equally
//! weighted benefit criterion; the TOPSIS closeness of a criterion, divided
//! by the sum of closenesses, is its weight. A small floor keeps every
//! criterion in play downstream.

use std::collections::HashSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::mcdm::{topsis_scores, DecisionMatrix};

/// Smallest weight any criterion may receive.
pub const WEIGHT_FLOOR: f64 = 0.005;

/// Importance ratings on the 1..=5 Likert scale, one row per expert.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExpertRatings {
    experts: Vec<String>,
    criteria: Vec<String>,
    ratings: Vec<Vec<u8>>,
}

impl ExpertRatings {
    pub fn new(experts: Vec<String>, criteria: Vec<String>, ratings: Vec<Vec<u8>>) -> Result<Self> {
        if experts.is_empty() || criteria.is_empty() {
            return Err(Error::domain("ratings need at least one expert and one criterion"));
        }
        let mut seen = HashSet::new();
        if let Some(e) = experts.iter().find(|e| !seen.insert(e.as_str())) {
            return Err(Error::domain(format!("duplicate expert `{e}`")));
        }
        let mut seen = HashSet::new();
        if let Some(c) = criteria.iter().find(|c| !seen.insert(c.as_str())) {
            return Err(Error::domain(format!("duplicate criterion `{c}`")));
        }
        if ratings.len() != experts.len() {
            return Err(Error::domain(format!(
                "{} rating rows for {} experts",
                ratings.len(),
                experts.len()
            )));
        }
        for (e, row) in experts.iter().zip(&ratings) {
            if row.len() != criteria.len() {
                return Err(Error::domain(format!(
                    "expert {e}: {} ratings for {} criteria",
                    row.len(),
                    criteria.len()
                )));
            }
            if let Some((c, v)) = criteria.iter().zip(row).find(|(_, v)| !(1..=5).contains(*v)) {
                return Err(Error::domain(format!(
                    "expert {e}: rating {v} for {c} is outside 1..5"
                )));
            }
        }
        Ok(Self {
            experts,
            criteria,
            ratings,
        })
    }

    pub fn experts(&self) -> &[String] {
        &self.experts
    }

    pub fn criteria(&self) -> &[String] {
        &self.criteria
    }

    pub fn ratings(&self) -> &[Vec<u8>] {
        &self.ratings
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct WeightVector {
    pub criteria: Vec<String>,
    pub weights: Vec<f64>,
}

impl WeightVector {
    pub fn get(&self, criterion: &str) -> Option<f64> {
        self.criteria
            .iter()
            .position(|c| c == criterion)
            .map(|i| self.weights[i])
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("weights serialize")
    }

    pub fn to_csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(["criterion", "weight"]).expect("in-memory write");
        for (c, v) in self.criteria.iter().zip(&self.weights) {
            w.write_record([c.as_str(), &format!("{v:.6}")]).expect("in-memory write");
        }
        String::from_utf8(w.into_inner().expect("flush")).expect("utf-8")
    }
}

pub fn derive_weights_topsis(r: &ExpertRatings) -> Result<WeightVector> {
    // Transpose: criteria become the rows being ranked.
    let values = (0..r.criteria.len())
        .map(|j| r.ratings.iter().map(|row| f64::from(row[j])).collect())
        .collect();
    let d = DecisionMatrix::uniform(r.criteria.clone(), r.experts.clone(), values)?;
    let closeness = topsis_scores(&d)?;
    let total: f64 = closeness.iter().sum();
    let n = closeness.len();
    let raw = if total > 0.0 {
        closeness.iter().map(|c| c / total).collect()
    } else {
        vec![1.0 / n as f64; n]
    };
    Ok(WeightVector {
        criteria: r.criteria.clone(),
        weights: apply_floor(raw, WEIGHT_FLOOR),
    })
}

/// Raises every weight below `floor` to `floor` and shrinks the others
/// proportionally so the total stays one. Repeats until no weight is pushed
/// under the floor by the shrinking.
fn apply_floor(mut w: Vec<f64>, floor: f64) -> Vec<f64> {
    let n = w.len();
    if floor * n as f64 >= 1.0 {
        return vec![1.0 / n as f64; n];
    }
    let mut pinned = vec![false; n];
    loop {
        let mut changed = false;
        for (p, v) in pinned.iter_mut().zip(&w) {
            if !*p && *v < floor {
                *p = true;
                changed = true;
            }
        }
        if !changed {
            return w;
        }
        let n_pinned = pinned.iter().filter(|p| **p).count();
        let free: f64 = w.iter().zip(&pinned).filter(|(_, p)| !**p).map(|(v, _)| v).sum();
        let target = 1.0 - floor * n_pinned as f64;
        for (v, p) in w.iter_mut().zip(&pinned) {
            *v = if *p { floor } else { *v * target / free };
        }
    }
}

/// Maps a Likert rating (or a mean of ratings) on 1..=5 onto `(0, 1]` as `v / 5`.
pub fn likert_to_unit(v: f64) -> Result<f64> {
    if !(1.0..=5.0).contains(&v) {
        return Err(Error::domain(format!("Likert value {v} is outside [1, 5]")));
    }
    Ok(v / 5.0)
}
