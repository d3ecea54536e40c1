use super::matrix::DecisionMatrix;
use super::normalize::column_bounds;
use super::ranking::{ScoreDirection, ScoredRanking};
use crate::error::{Error, Result};

pub const DEFAULT_CONCORDANCE_THRESHOLD: f64 = 0.65;
pub const DEFAULT_DISCORDANCE_THRESHOLD: f64 = 0.35;

/// Pairwise ELECTRE I tables; `outranks[a][b]` holds the outranking relation.
#[derive(Debug, Clone, PartialEq)]
pub struct OutrankingTables {
    pub concordance: Vec<Vec<f64>>,
    pub discordance: Vec<Vec<f64>>,
    pub outranks: Vec<Vec<bool>>,
}

/// Concordance is the weight of criteria on which `a` is at least as good as
/// `b`; discordance is the largest deficit of `a` against `b`, scaled by the
/// criterion's range (zero for constant criteria).
pub fn outranking_tables(
    d: &DecisionMatrix,
    c_threshold: f64,
    d_threshold: f64,
) -> OutrankingTables {
    let m = d.n_alternatives();
    let n = d.n_criteria();
    let (mins, maxs) = column_bounds(d);
    let mut concordance = vec![vec![0.0; m]; m];
    let mut discordance = vec![vec![0.0; m]; m];
    let mut outranks = vec![vec![false; m]; m];
    for a in 0..m {
        for b in 0..m {
            if a == b {
                continue;
            }
            let mut c = 0.0;
            let mut worst = 0.0_f64;
            for j in 0..n {
                let (va, vb) = (d.oriented(a, j), d.oriented(b, j));
                if va >= vb {
                    c += d.weights()[j];
                }
                let span = maxs[j] - mins[j];
                if span > 0.0 {
                    worst = worst.max((vb - va).max(0.0) / span);
                }
            }
            concordance[a][b] = c;
            discordance[a][b] = worst;
            outranks[a][b] = c >= c_threshold && worst <= d_threshold;
        }
    }
    OutrankingTables {
        concordance,
        discordance,
        outranks,
    }
}

/// ELECTRE I scalarized to a full ranking by net outranking count
/// (alternatives outranked minus alternatives outranking).
pub fn rank_electre1(d: &DecisionMatrix, c_threshold: f64, d_threshold: f64) -> Result<ScoredRanking> {
    if !(0.0..=1.0).contains(&c_threshold) || !(0.0..=1.0).contains(&d_threshold) {
        return Err(Error::domain("ELECTRE thresholds must lie in [0, 1]"));
    }
    let t = outranking_tables(d, c_threshold, d_threshold);
    let m = d.n_alternatives();
    let scores = (0..m)
        .map(|a| {
            let wins = (0..m).filter(|&b| t.outranks[a][b]).count() as f64;
            let losses = (0..m).filter(|&b| t.outranks[b][a]).count() as f64;
            wins - losses
        })
        .collect();
    Ok(ScoredRanking::from_scores(
        "ELECTRE",
        d.alternatives().to_vec(),
        scores,
        ScoreDirection::HigherIsBetter,
    ))
}
