use super::matrix::DecisionMatrix;
use super::normalize::min_max;
use super::ranking::{ScoreDirection, ScoredRanking};
use crate::error::Result;

/// Simple additive weighting over min-max normalized values.
pub fn rank_saw(d: &DecisionMatrix) -> Result<ScoredRanking> {
    let scores = min_max(d)
        .iter()
        .map(|row| row.iter().zip(d.weights()).map(|(v, w)| v * w).sum())
        .collect();
    Ok(ScoredRanking::from_scores(
        "SAW",
        d.alternatives().to_vec(),
        scores,
        ScoreDirection::HigherIsBetter,
    ))
}
