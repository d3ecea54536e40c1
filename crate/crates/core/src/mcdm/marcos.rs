use super::matrix::DecisionMatrix;
use super::normalize::{column_bounds, ensure_nonzero_columns};
use super::ranking::{ScoreDirection, ScoredRanking};
use crate::error::{Error, Result};

/// MARCOS utility function (higher is better).
///
/// The matrix is extended with an anti-ideal row (worst per criterion) and an
/// ideal row (best per criterion); values are scaled against the ideal,
/// weighted and summed, and each alternative's utility degrees relative to
/// both reference rows feed the compromise utility function.
pub fn rank_marcos(d: &DecisionMatrix) -> Result<ScoredRanking> {
    ensure_nonzero_columns(d)?;
    let n = d.n_criteria();
    let (mins, maxs) = column_bounds(d);
    let ideal: Vec<f64> = (0..n).map(|j| if d.is_benefit(j) { maxs[j] } else { mins[j] }).collect();
    let anti: Vec<f64> = (0..n).map(|j| if d.is_benefit(j) { mins[j] } else { maxs[j] }).collect();
    for j in 0..n {
        let zero_divisor = if d.is_benefit(j) {
            ideal[j] == 0.0
        } else {
            d.column(j).any(|v| v == 0.0)
        };
        if zero_divisor {
            return Err(Error::degenerate(
                &d.criteria()[j].name,
                "cannot be scaled against its ideal value",
            ));
        }
    }
    let utility = |row: &[f64]| -> f64 {
        row.iter()
            .enumerate()
            .map(|(j, &x)| {
                let scaled = if d.is_benefit(j) { x / ideal[j] } else { ideal[j] / x };
                scaled * d.weights()[j]
            })
            .sum()
    };
    let s_ideal = utility(&ideal);
    let s_anti = utility(&anti);
    if s_anti <= 0.0 {
        return Err(Error::domain("MARCOS anti-ideal solution has zero utility"));
    }
    let scores = d
        .values()
        .iter()
        .map(|row| {
            let s = utility(row);
            let k_minus = s / s_anti;
            let k_plus = s / s_ideal;
            let total = k_plus + k_minus;
            if total == 0.0 {
                return 0.0;
            }
            let f_plus = k_minus / total;
            let f_minus = k_plus / total;
            total / (1.0 + (1.0 - f_plus) / f_plus + (1.0 - f_minus) / f_minus)
        })
        .collect();
    Ok(ScoredRanking::from_scores(
        "MARCOS",
        d.alternatives().to_vec(),
        scores,
        ScoreDirection::HigherIsBetter,
    ))
}
