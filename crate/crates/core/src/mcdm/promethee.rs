use super::matrix::DecisionMatrix;
use super::ranking::{ScoreDirection, ScoredRanking};
use crate::error::Result;

/// Weighted preference index `π(a, b)` under the usual criterion.
pub fn preference_matrix(d: &DecisionMatrix) -> Vec<Vec<f64>> {
    let m = d.n_alternatives();
    let mut pi = vec![vec![0.0; m]; m];
    for a in 0..m {
        for b in 0..m {
            if a != b {
                pi[a][b] = (0..d.n_criteria())
                    .filter(|&j| d.oriented(a, j) > d.oriented(b, j))
                    .map(|j| d.weights()[j])
                    .sum();
            }
        }
    }
    pi
}

/// PROMETHEE II net outranking flow in `[-1, 1]` (higher is better).
pub fn rank_promethee2(d: &DecisionMatrix) -> Result<ScoredRanking> {
    let m = d.n_alternatives();
    let pi = preference_matrix(d);
    let scores = (0..m)
        .map(|a| {
            if m < 2 {
                return 0.0;
            }
            let out: f64 = pi[a].iter().sum();
            let inc: f64 = pi.iter().map(|row| row[a]).sum();
            (out - inc) / (m - 1) as f64
        })
        .collect();
    Ok(ScoredRanking::from_scores(
        "PROMETHEE",
        d.alternatives().to_vec(),
        scores,
        ScoreDirection::HigherIsBetter,
    ))
}
