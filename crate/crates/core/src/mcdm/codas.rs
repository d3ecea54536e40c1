use super::matrix::DecisionMatrix;
use super::normalize::{linear_to_best, weighted};
use super::ranking::{ScoreDirection, ScoredRanking};
use crate::error::{Error, Result};

pub const DEFAULT_TAU: f64 = 0.02;

/// CODAS assessment score (higher is better).
///
/// Distances to the negative-ideal point are measured with the Euclidean and
/// taxicab metrics. The taxicab difference only contributes to a pairwise
/// comparison when the Euclidean difference is at least `tau`.
pub fn rank_codas(d: &DecisionMatrix, tau: f64) -> Result<ScoredRanking> {
    if !(tau >= 0.0 && tau.is_finite()) {
        return Err(Error::domain(format!("CODAS threshold {tau} must be non-negative")));
    }
    let r = weighted(d, linear_to_best(d)?);
    let n = d.n_criteria();
    let neg_ideal: Vec<f64> = (0..n)
        .map(|j| r.iter().map(|row| row[j]).fold(f64::INFINITY, f64::min))
        .collect();
    let euclid: Vec<f64> = r
        .iter()
        .map(|row| {
            row.iter()
                .zip(&neg_ideal)
                .map(|(x, ns)| (x - ns).powi(2))
                .sum::<f64>()
                .sqrt()
        })
        .collect();
    let taxicab: Vec<f64> = r
        .iter()
        .map(|row| row.iter().zip(&neg_ideal).map(|(x, ns)| (x - ns).abs()).sum())
        .collect();
    let m = d.n_alternatives();
    let scores = (0..m)
        .map(|i| {
            (0..m)
                .map(|k| {
                    let de = euclid[i] - euclid[k];
                    let psi = if de.abs() >= tau { 1.0 } else { 0.0 };
                    de + psi * (taxicab[i] - taxicab[k])
                })
                .sum()
        })
        .collect();
    Ok(ScoredRanking::from_scores(
        "CODAS",
        d.alternatives().to_vec(),
        scores,
        ScoreDirection::HigherIsBetter,
    ))
}
