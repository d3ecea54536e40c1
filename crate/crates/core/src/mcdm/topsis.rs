use super::matrix::DecisionMatrix;
use super::normalize::{vector, weighted};
use super::ranking::{ScoreDirection, ScoredRanking};
use crate::error::Result;

/// Closeness reported when an alternative is equidistant from ideal and
/// anti-ideal at distance zero (single alternative or identical rows).
pub const DEGENERATE_CLOSENESS: f64 = 0.5;

pub(crate) fn closeness(d_plus: f64, d_minus: f64) -> f64 {
    let total = d_plus + d_minus;
    if total == 0.0 {
        DEGENERATE_CLOSENESS
    } else {
        d_minus / total
    }
}

/// TOPSIS closeness coefficients (vector normalization, higher is better).
pub fn topsis_scores(d: &DecisionMatrix) -> Result<Vec<f64>> {
    let v = weighted(d, vector(d)?);
    let n = d.n_criteria();
    let mut ideal = vec![0.0; n];
    let mut anti = vec![0.0; n];
    for j in 0..n {
        let col = v.iter().map(|row| row[j]);
        let (lo, hi) = col.fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), x| {
            (lo.min(x), hi.max(x))
        });
        (ideal[j], anti[j]) = if d.is_benefit(j) { (hi, lo) } else { (lo, hi) };
    }
    Ok(v.iter()
        .map(|row| {
            let dp = distance(row, &ideal);
            let dm = distance(row, &anti);
            closeness(dp, dm)
        })
        .collect())
}

fn distance(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| (x - y).powi(2)).sum::<f64>().sqrt()
}

pub fn rank_topsis(d: &DecisionMatrix) -> Result<ScoredRanking> {
    Ok(ScoredRanking::from_scores(
        "TOPSIS",
        d.alternatives().to_vec(),
        topsis_scores(d)?,
        ScoreDirection::HigherIsBetter,
    ))
}
