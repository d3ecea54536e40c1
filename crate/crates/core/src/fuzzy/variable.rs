use std::collections::{BTreeMap, HashSet};

use serde::{Deserialize, Serialize};

use super::membership::TrapezoidalSet;
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Term {
    pub label: String,
    pub trapezoid: TrapezoidalSet,
}

impl Term {
    pub fn new(label: impl Into<String>, trapezoid: TrapezoidalSet) -> Self {
        Self {
            label: label.into(),
            trapezoid,
        }
    }
}

/// A linguistic variable over `[0, 1]` whose terms are ordered from least
/// to most severe.
///
/// Construction checks that labels are unique, that plateau midpoints
/// strictly increase along the list, and that every point of the universe
/// has positive membership in at least one term.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "RawVariable", into = "RawVariable")]
pub struct LinguisticVariable {
    name: String,
    terms: Vec<Term>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawVariable {
    #[serde(default, skip_serializing_if = "String::is_empty")]
    name: String,
    terms: Vec<Term>,
}

impl TryFrom<RawVariable> for LinguisticVariable {
    type Error = Error;

    fn try_from(raw: RawVariable) -> Result<Self> {
        LinguisticVariable::new(raw.name, raw.terms)
    }
}

impl From<LinguisticVariable> for RawVariable {
    fn from(v: LinguisticVariable) -> Self {
        RawVariable {
            name: v.name,
            terms: v.terms,
        }
    }
}

impl LinguisticVariable {
    pub fn new(name: impl Into<String>, terms: Vec<Term>) -> Result<Self> {
        let name = name.into();
        if terms.is_empty() {
            return Err(Error::domain(format!("variable `{name}` has no terms")));
        }
        let mut seen = HashSet::new();
        for t in &terms {
            if !seen.insert(t.label.as_str()) {
                return Err(Error::domain(format!(
                    "variable `{name}`: duplicate term label `{}`",
                    t.label
                )));
            }
        }
        for pair in terms.windows(2) {
            if pair[1].trapezoid.peak() <= pair[0].trapezoid.peak() {
                return Err(Error::domain(format!(
                    "variable `{name}`: term `{}` must peak after `{}`",
                    pair[1].label, pair[0].label
                )));
            }
        }
        let var = Self { name, terms };
        // Memberships are piecewise linear, so positivity at every breakpoint
        // (and at the universe ends) implies positivity everywhere.
        let mut probes = vec![0.0, 1.0];
        probes.extend(var.terms.iter().flat_map(|t| t.trapezoid.breakpoints()));
        for x in probes {
            if var.terms.iter().all(|t| t.trapezoid.membership(x) <= 0.0) {
                return Err(Error::domain(format!(
                    "variable `{}` leaves x = {x} uncovered",
                    var.name
                )));
            }
        }
        Ok(var)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn labels(&self) -> impl Iterator<Item = &str> {
        self.terms.iter().map(|t| t.label.as_str())
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.terms.iter().position(|t| t.label == label)
    }

    /// Degree of membership of `x` in each term, in term order.
    pub fn degrees(&self, x: f64) -> Result<Vec<f64>> {
        check_unit(x)?;
        Ok(self
            .terms
            .iter()
            .map(|t| t.trapezoid.membership(x))
            .collect())
    }

    /// Term index with the largest membership at `x`; ties go to the more
    /// severe term.
    pub fn argmax_term(&self, x: f64) -> Result<usize> {
        let degrees = self.degrees(x)?;
        let mut best = 0;
        for (i, d) in degrees.iter().enumerate() {
            if *d >= degrees[best] {
                best = i;
            }
        }
        Ok(best)
    }
}

/// Membership of a crisp value in every term of `var`, keyed by label.
pub fn fuzzify(x: f64, var: &LinguisticVariable) -> Result<BTreeMap<String, f64>> {
    let degrees = var.degrees(x)?;
    Ok(var
        .terms
        .iter()
        .zip(degrees)
        .map(|(t, d)| (t.label.clone(), d))
        .collect())
}

pub(crate) fn check_unit(x: f64) -> Result<()> {
    if x.is_finite() && (0.0..=1.0).contains(&x) {
        Ok(())
    } else {
        Err(Error::domain(format!("crisp input {x} outside [0, 1]")))
    }
}
