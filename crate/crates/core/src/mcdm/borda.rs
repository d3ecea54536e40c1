use super::matrix::DecisionMatrix;
use super::ranking::{ScoreDirection, ScoredRanking};
use crate::error::{Error, Result};

/// Borda count over several rankings of the same alternatives: each ranking
/// awards `m − rank` points. The output keeps the first ranking's
/// alternative order, which also drives tie-breaking.
pub fn rank_borda(rankings: &[ScoredRanking]) -> Result<ScoredRanking> {
    borda_named("BORDA", rankings)
}

pub(crate) fn borda_named(method: &str, rankings: &[ScoredRanking]) -> Result<ScoredRanking> {
    let first = rankings
        .first()
        .ok_or_else(|| Error::domain("Borda count needs at least one ranking"))?;
    let alternatives = first.alternatives.clone();
    let m = alternatives.len();
    let mut points = vec![0.0; m];
    for r in rankings {
        let ranks = r.ranks_aligned_to(&alternatives)?;
        for (p, rank) in points.iter_mut().zip(ranks) {
            *p += (m - rank) as f64;
        }
    }
    Ok(ScoredRanking::from_scores(
        method,
        alternatives,
        points,
        ScoreDirection::HigherIsBetter,
    ))
}

/// Standalone Borda method: one ranking per criterion (orientation-aware),
/// combined by Borda count. Criterion weights are not used.
pub fn rank_borda_matrix(d: &DecisionMatrix) -> Result<ScoredRanking> {
    let per_criterion: Vec<ScoredRanking> = (0..d.n_criteria())
        .map(|j| {
            ScoredRanking::from_scores(
                d.criteria()[j].name.clone(),
                d.alternatives().to_vec(),
                (0..d.n_alternatives()).map(|i| d.oriented(i, j)).collect(),
                ScoreDirection::HigherIsBetter,
            )
        })
        .collect();
    rank_borda(&per_criterion)
}
