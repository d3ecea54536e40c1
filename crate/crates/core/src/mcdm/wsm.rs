use super::matrix::DecisionMatrix;
use super::normalize::reciprocal_sum;
use super::ranking::{ScoreDirection, ScoredRanking};
use crate::error::Result;

/// Weighted sum model over sum-normalized values, with cost criteria turned
/// into benefits by reciprocal before normalizing. Unlike SAW this keeps
/// ratios between alternatives instead of stretching each column to [0, 1].
pub fn rank_wsm(d: &DecisionMatrix) -> Result<ScoredRanking> {
    let scores = reciprocal_sum(d)?
        .iter()
        .map(|row| row.iter().zip(d.weights()).map(|(v, w)| v * w).sum())
        .collect();
    Ok(ScoredRanking::from_scores(
        "WSM",
        d.alternatives().to_vec(),
        scores,
        ScoreDirection::HigherIsBetter,
    ))
}
