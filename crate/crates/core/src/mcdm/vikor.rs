use super::matrix::DecisionMatrix;
use super::ranking::{ScoreDirection, ScoredRanking};
use crate::error::{Error, Result};

pub const DEFAULT_V: f64 = 0.5;

#[derive(Debug, Clone, PartialEq)]
pub struct VikorMeasures {
    /// Group utility: weighted sum of normalized regrets.
    pub s: Vec<f64>,
    /// Individual regret: largest weighted normalized regret.
    pub r: Vec<f64>,
    pub q: Vec<f64>,
}

pub fn vikor_measures(d: &DecisionMatrix, v: f64) -> VikorMeasures {
    let m = d.n_alternatives();
    let n = d.n_criteria();
    let mut s = vec![0.0; m];
    let mut r = vec![0.0_f64; m];
    for j in 0..n {
        let col: Vec<f64> = (0..m).map(|i| d.oriented(i, j)).collect();
        let best = col.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
        let worst = col.iter().cloned().fold(f64::INFINITY, f64::min);
        let span = best - worst;
        if span == 0.0 {
            continue;
        }
        for i in 0..m {
            let regret = d.weights()[j] * (best - col[i]) / span;
            s[i] += regret;
            r[i] = r[i].max(regret);
        }
    }
    let scaled = |xs: &[f64]| -> Vec<f64> {
        let lo = xs.iter().cloned().fold(f64::INFINITY, f64::min);
        let hi = xs.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
        xs.iter()
            .map(|x| if hi > lo { (x - lo) / (hi - lo) } else { 0.0 })
            .collect()
    };
    let (qs, qr) = (scaled(&s), scaled(&r));
    let q = qs.iter().zip(&qr).map(|(a, b)| v * a + (1.0 - v) * b).collect();
    VikorMeasures { s, r, q }
}

/// VIKOR ranked by the compromise index `Q` alone (lower is better).
pub fn rank_vikor(d: &DecisionMatrix, v: f64) -> Result<ScoredRanking> {
    if !(0.0..=1.0).contains(&v) {
        return Err(Error::domain(format!("VIKOR strategy weight {v} outside [0, 1]")));
    }
    Ok(ScoredRanking::from_scores(
        "VIKOR",
        d.alternatives().to_vec(),
        vikor_measures(d, v).q,
        ScoreDirection::LowerIsBetter,
    ))
}
