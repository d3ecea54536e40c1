use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Normalized trapezoidal membership function on the universe `[0, 1]`.
///
/// Breakpoints satisfy `a1 <= a2 <= a3 <= a4`; membership is 1 on `[a2, a3]`.
/// A vertical shoulder (`a1 == a2` or `a3 == a4`) is a step with membership 1
/// at the breakpoint itself.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "[f64; 4]", into = "[f64; 4]")]
pub struct TrapezoidalSet {
    a1: f64,
    a2: f64,
    a3: f64,
    a4: f64,
}

impl TrapezoidalSet {
    pub fn new(a1: f64, a2: f64, a3: f64, a4: f64) -> Result<Self> {
        let pts = [a1, a2, a3, a4];
        if pts.iter().any(|p| !p.is_finite() || *p < 0.0 || *p > 1.0) {
            return Err(Error::domain(format!(
                "trapezoid breakpoints {pts:?} must lie in [0, 1]"
            )));
        }
        if !(a1 <= a2 && a2 <= a3 && a3 <= a4) {
            return Err(Error::domain(format!(
                "trapezoid breakpoints {pts:?} must be non-decreasing"
            )));
        }
        Ok(Self { a1, a2, a3, a4 })
    }

    pub fn breakpoints(&self) -> [f64; 4] {
        [self.a1, self.a2, self.a3, self.a4]
    }

    pub fn membership(&self, x: f64) -> f64 {
        if x < self.a1 || x > self.a4 {
            0.0
        } else if x >= self.a2 && x <= self.a3 {
            1.0
        } else if x < self.a2 {
            (x - self.a1) / (self.a2 - self.a1)
        } else {
            (self.a4 - x) / (self.a4 - self.a3)
        }
    }

    /// Midpoint of the unit plateau.
    pub fn peak(&self) -> f64 {
        0.5 * (self.a2 + self.a3)
    }

    pub fn support(&self) -> (f64, f64) {
        (self.a1, self.a4)
    }
}

impl TryFrom<[f64; 4]> for TrapezoidalSet {
    type Error = Error;

    fn try_from(p: [f64; 4]) -> Result<Self> {
        TrapezoidalSet::new(p[0], p[1], p[2], p[3])
    }
}

impl From<TrapezoidalSet> for [f64; 4] {
    fn from(t: TrapezoidalSet) -> Self {
        t.breakpoints()
    }
}
