use serde::{Deserialize, Serialize};

use super::ranking::{ScoreDirection, ScoredRanking};
use super::topsis::closeness;
use crate::error::{Error, Result};
use crate::fuzzy::TrapezoidalSet;

/// A trapezoidal fuzzy number on `[0, 1]`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct FuzzyRating(pub TrapezoidalSet);

impl FuzzyRating {
    pub fn new(a1: f64, a2: f64, a3: f64, a4: f64) -> Result<Self> {
        Ok(Self(TrapezoidalSet::new(a1, a2, a3, a4)?))
    }

    pub fn breakpoints(&self) -> [f64; 4] {
        self.0.breakpoints()
    }

    /// Breakpoint-wise product. Both inputs are non-negative, so the result
    /// stays ordered and inside `[0, 1]`.
    pub fn product(&self, other: &FuzzyRating) -> FuzzyRating {
        let (a, b) = (self.breakpoints(), other.breakpoints());
        FuzzyRating(
            TrapezoidalSet::new(a[0] * b[0], a[1] * b[1], a[2] * b[2], a[3] * b[3])
                .expect("product of ordered non-negative breakpoints is ordered"),
        )
    }
}

/// Vertex-method distance between two trapezoidal fuzzy numbers.
pub fn vertex_distance(a: &FuzzyRating, b: &FuzzyRating) -> f64 {
    let (a, b) = (a.breakpoints(), b.breakpoints());
    (0.25 * a.iter().zip(&b).map(|(x, y)| (x - y).powi(2)).sum::<f64>()).sqrt()
}

/// Fuzzy-TOPSIS over fuzzy risk priority numbers (likelihood × impact).
///
/// The fuzzy ideal and anti-ideal are the component-wise max and min of the
/// priority numbers; the score is the closeness coefficient.
pub fn rank_fuzzy_topsis(
    alternatives: &[String],
    likelihood_ratings: &[FuzzyRating],
    impact_ratings: &[FuzzyRating],
) -> Result<ScoredRanking> {
    if alternatives.is_empty() {
        return Err(Error::domain("fuzzy TOPSIS needs at least one alternative"));
    }
    if likelihood_ratings.len() != alternatives.len() || impact_ratings.len() != alternatives.len() {
        return Err(Error::domain(format!(
            "{} alternatives but {} likelihood and {} impact ratings",
            alternatives.len(),
            likelihood_ratings.len(),
            impact_ratings.len()
        )));
    }
    let priority: Vec<FuzzyRating> = likelihood_ratings
        .iter()
        .zip(impact_ratings)
        .map(|(l, i)| l.product(i))
        .collect();
    let mut hi = [f64::NEG_INFINITY; 4];
    let mut lo = [f64::INFINITY; 4];
    for p in &priority {
        for (k, v) in p.breakpoints().into_iter().enumerate() {
            hi[k] = hi[k].max(v);
            lo[k] = lo[k].min(v);
        }
    }
    let ideal = FuzzyRating::new(hi[0], hi[1], hi[2], hi[3])?;
    let anti = FuzzyRating::new(lo[0], lo[1], lo[2], lo[3])?;
    let scores = priority
        .iter()
        .map(|p| closeness(vertex_distance(p, &ideal), vertex_distance(p, &anti)))
        .collect();
    Ok(ScoredRanking::from_scores(
        "FUZZY-TOPSIS",
        alternatives.to_vec(),
        scores,
        ScoreDirection::HigherIsBetter,
    ))
}
