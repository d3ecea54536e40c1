use std::cmp::Ordering;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ScoreDirection {
    HigherIsBetter,
    LowerIsBetter,
}

/// Per-alternative scores and the 1-based ranks derived from them.
///
/// Scores that agree to 12 decimal places are treated as tied, and ties go
/// to the alternative that appears first in input order.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ScoredRanking {
    pub method: String,
    pub direction: ScoreDirection,
    pub alternatives: Vec<String>,
    pub scores: Vec<f64>,
    pub ranks: Vec<usize>,
}

fn tie_key(score: f64) -> i128 {
    (score * 1e12).round() as i128
}

/// 1-based ranks for `scores`; equal scores keep input order.
pub fn ranks_from_scores(scores: &[f64], direction: ScoreDirection) -> Vec<usize> {
    let mut order: Vec<usize> = (0..scores.len()).collect();
    order.sort_by(|&a, &b| {
        let (ka, kb) = (tie_key(scores[a]), tie_key(scores[b]));
        let by_score = match direction {
            ScoreDirection::HigherIsBetter => kb.cmp(&ka),
            ScoreDirection::LowerIsBetter => ka.cmp(&kb),
        };
        match by_score {
            Ordering::Equal => a.cmp(&b),
            other => other,
        }
    });
    let mut ranks = vec![0; scores.len()];
    for (pos, idx) in order.into_iter().enumerate() {
        ranks[idx] = pos + 1;
    }
    ranks
}

impl ScoredRanking {
    pub fn from_scores(
        method: impl Into<String>,
        alternatives: Vec<String>,
        scores: Vec<f64>,
        direction: ScoreDirection,
    ) -> Self {
        let ranks = ranks_from_scores(&scores, direction);
        Self {
            method: method.into(),
            direction,
            alternatives,
            scores,
            ranks,
        }
    }

    pub fn len(&self) -> usize {
        self.alternatives.len()
    }

    pub fn is_empty(&self) -> bool {
        self.alternatives.is_empty()
    }

    pub fn rank_of(&self, alternative: &str) -> Option<usize> {
        self.alternatives
            .iter()
            .position(|a| a == alternative)
            .map(|i| self.ranks[i])
    }

    /// Alternatives sorted from best to worst.
    pub fn ordered(&self) -> Vec<&str> {
        let mut idx: Vec<usize> = (0..self.len()).collect();
        idx.sort_by_key(|&i| self.ranks[i]);
        idx.into_iter().map(|i| self.alternatives[i].as_str()).collect()
    }

    /// Rank vector re-expressed in the alternative order of `reference`.
    pub fn ranks_aligned_to(&self, reference: &[String]) -> Result<Vec<usize>> {
        if reference.len() != self.len() {
            return Err(Error::domain(format!(
                "ranking `{}` covers {} alternatives, expected {}",
                self.method,
                self.len(),
                reference.len()
            )));
        }
        reference
            .iter()
            .map(|a| {
                self.rank_of(a).ok_or_else(|| {
                    Error::domain(format!("ranking `{}` lacks alternative `{a}`", self.method))
                })
            })
            .collect()
    }

    pub fn to_csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(["alternative", "score", "rank"]).expect("in-memory write");
        for ((a, s), r) in self.alternatives.iter().zip(&self.scores).zip(&self.ranks) {
            w.write_record([a.as_str(), &format!("{s:.6}"), &r.to_string()])
                .expect("in-memory write");
        }
        String::from_utf8(w.into_inner().expect("flush")).expect("utf-8")
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("ranking serializes")
    }
}
