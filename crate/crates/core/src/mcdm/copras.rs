use super::matrix::{DecisionMatrix, Orientation};
use super::normalize::{sum, weighted};
use super::ranking::{ScoreDirection, ScoredRanking};
use crate::error::{Error, Result};

/// COPRAS relative significance `Q` (higher is better).
///
/// With no cost criteria `Q` reduces to the weighted benefit sum `S⁺`.
pub fn rank_copras(d: &DecisionMatrix) -> Result<ScoredRanking> {
    let v = weighted(d, sum(d)?);
    let split = |benefit: bool| -> Vec<f64> {
        v.iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|(j, _)| d.is_benefit(*j) == benefit)
                    .map(|(_, x)| x)
                    .sum()
            })
            .collect()
    };
    let s_plus = split(true);
    let has_cost = (0..d.n_criteria()).any(|j| !d.is_benefit(j));
    let scores = if has_cost {
        let s_minus = split(false);
        if let Some(i) = s_minus.iter().position(|s| *s <= 0.0) {
            return Err(Error::degenerate(
                d.criteria()
                    .iter()
                    .find(|c| c.orientation == Orientation::Cost)
                    .map(|c| c.name.as_str())
                    .unwrap_or_default(),
                format!(
                    "gives alternative `{}` a non-positive cost sum",
                    d.alternatives()[i]
                ),
            ));
        }
        let min = s_minus.iter().cloned().fold(f64::INFINITY, f64::min);
        let total: f64 = s_minus.iter().sum();
        let inv_total: f64 = s_minus.iter().map(|s| min / s).sum();
        s_plus
            .iter()
            .zip(&s_minus)
            .map(|(sp, sm)| sp + (min * total) / (sm * inv_total))
            .collect()
    } else {
        s_plus
    };
    Ok(ScoredRanking::from_scores(
        "COPRAS",
        d.alternatives().to_vec(),
        scores,
        ScoreDirection::HigherIsBetter,
    ))
}
