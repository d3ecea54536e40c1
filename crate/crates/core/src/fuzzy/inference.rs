//! Mamdani inference over the likelihood × impact rule table.
//!
//! AND and implication are `min`, aggregation is `max`, and the crisp risk
//! index is the centre of area of the aggregated output set sampled on a
//! uniform grid over `[0, 1]`.

use serde::{Deserialize, Serialize};

use super::config::FisConfig;
use super::variable::{check_unit, LinguisticVariable};
use crate::error::{Error, Result};

/// Firing strength of one rule for a given input pair.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RuleActivation {
    pub likelihood: String,
    pub impact: String,
    pub risk: String,
    pub strength: f64,
}

/// The aggregated output fuzzy set: each risk term clipped at the largest
/// firing strength among the rules concluding it, combined by pointwise max.
#[derive(Debug, Clone)]
pub struct AggregatedOutput<'a> {
    risk: &'a LinguisticVariable,
    heights: Vec<f64>,
}

impl<'a> AggregatedOutput<'a> {
    pub fn new(risk: &'a LinguisticVariable, heights: Vec<f64>) -> Result<Self> {
        if heights.len() != risk.len() {
            return Err(Error::domain(format!(
                "{} clip heights for {} risk terms",
                heights.len(),
                risk.len()
            )));
        }
        Ok(Self { risk, heights })
    }

    /// Clip height per risk term, in term order.
    pub fn heights(&self) -> &[f64] {
        &self.heights
    }

    pub fn membership(&self, x: f64) -> f64 {
        self.risk
            .terms()
            .iter()
            .zip(&self.heights)
            .filter(|(_, h)| **h > 0.0)
            .map(|(t, h)| t.trapezoid.membership(x).min(*h))
            .fold(0.0, f64::max)
    }

    /// Closed hull of the supports of all terms with a positive clip height.
    pub fn support(&self) -> Option<(f64, f64)> {
        self.risk
            .terms()
            .iter()
            .zip(&self.heights)
            .filter(|(_, h)| **h > 0.0)
            .map(|(t, _)| t.trapezoid.support())
            .reduce(|(lo, hi), (a, b)| (lo.min(a), hi.max(b)))
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AssessmentResult {
    pub crisp_risk: f64,
    pub level: String,
    pub activation_trace: Vec<RuleActivation>,
}

/// Evaluates every rule and returns the aggregated output with the per-rule
/// firing strengths (in rule-base order).
pub fn infer(
    likelihood_x: f64,
    impact_x: f64,
    cfg: &FisConfig,
) -> Result<(AggregatedOutput<'_>, Vec<RuleActivation>)> {
    check_unit(likelihood_x)?;
    check_unit(impact_x)?;
    let lik = cfg.likelihood().degrees(likelihood_x)?;
    let imp = cfg.impact().degrees(impact_x)?;
    let mut heights = vec![0.0_f64; cfg.risk().len()];
    for (li, row) in cfg.rule_table().iter().enumerate() {
        for (ii, &ri) in row.iter().enumerate() {
            let strength = lik[li].min(imp[ii]);
            heights[ri] = heights[ri].max(strength);
        }
    }
    let trace = cfg
        .rulebase()
        .rules
        .iter()
        .map(|r| {
            let li = cfg.likelihood().index_of(&r.likelihood_term).expect("resolved");
            let ii = cfg.impact().index_of(&r.impact_term).expect("resolved");
            RuleActivation {
                likelihood: r.likelihood_term.clone(),
                impact: r.impact_term.clone(),
                risk: r.risk_term.clone(),
                strength: lik[li].min(imp[ii]),
            }
        })
        .collect();
    Ok((AggregatedOutput::new(cfg.risk(), heights)?, trace))
}

/// Discrete centre of area of `mu` over `resolution` uniform samples of
/// `[0, 1]` (both ends included).
pub fn defuzzify_centroid<F>(mu: F, resolution: usize) -> Result<f64>
where
    F: Fn(f64) -> f64,
{
    if resolution < 2 {
        return Err(Error::domain("centroid resolution must be at least 2"));
    }
    let step = 1.0 / (resolution - 1) as f64;
    let (mut num, mut den) = (0.0, 0.0);
    for i in 0..resolution {
        let x = i as f64 * step;
        let m = mu(x);
        num += m * x;
        den += m;
    }
    if den <= 0.0 {
        return Err(Error::NoRuleFired);
    }
    Ok(num / den)
}

/// Label of the risk term with the highest membership at `crisp`; ties go to
/// the more severe term.
pub fn classify_level(crisp: f64, risk_var: &LinguisticVariable) -> Result<&str> {
    let idx = risk_var.argmax_term(crisp)?;
    Ok(&risk_var.terms()[idx].label)
}

pub fn assess_risk(likelihood_x: f64, impact_x: f64, cfg: &FisConfig) -> Result<AssessmentResult> {
    let (agg, activation_trace) = infer(likelihood_x, impact_x, cfg)?;
    let crisp_risk = defuzzify_centroid(|x| agg.membership(x), cfg.defuzz_resolution())?;
    let level = classify_level(crisp_risk, cfg.risk())?.to_string();
    Ok(AssessmentResult {
        crisp_risk,
        level,
        activation_trace,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fuzzy::config::default_config;
    use crate::fuzzy::membership::TrapezoidalSet;

    fn centroid_of(t: TrapezoidalSet) -> f64 {
        defuzzify_centroid(|x| t.membership(x), 10_001).unwrap()
    }

    #[test]
    fn corner_inputs_fire_single_rule() {
        let cfg = default_config();
        let (agg, trace) = infer(0.0, 0.0, &cfg).unwrap();
        assert_eq!(agg.heights(), &[1.0, 0.0, 0.0, 0.0]);
        assert_eq!(trace.iter().filter(|a| a.strength > 0.0).count(), 1);
        assert_eq!(trace[0].strength, 1.0);

        let (agg, trace) = infer(1.0, 1.0, &cfg).unwrap();
        assert_eq!(agg.heights(), &[0.0, 0.0, 0.0, 1.0]);
        assert_eq!(trace.iter().filter(|a| a.strength > 0.0).count(), 1);
        assert_eq!(trace[24].strength, 1.0);
    }

    #[test]
    fn mixed_activation_at_half_and_nine_tenths() {
        // Likelihood 0.5 sits at the peak of Medium only (0.50..0.61 plateau,
        // Unlikely falls to 0 at 0.50). Impact 0.9 is 0.2 Medium-High and
        // 0.8 High. Rules (Medium, Medium-High) -> High and
        // (Medium, High) -> High fire at 0.2 and 0.8.
        let cfg = default_config();
        let (agg, trace) = infer(0.5, 0.9, &cfg).unwrap();
        let fired: Vec<_> = trace.iter().filter(|a| a.strength > 0.0).collect();
        assert_eq!(fired.len(), 2);
        assert!((agg.heights()[2] - 0.8).abs() < 1e-12);
        assert_eq!(agg.heights()[0], 0.0);
        assert_eq!(agg.heights()[1], 0.0);
        assert_eq!(agg.heights()[3], 0.0);
    }

    #[test]
    fn centroid_of_reference_shapes() {
        let sym = TrapezoidalSet::new(0.0, 0.25, 0.75, 1.0).unwrap();
        assert!((centroid_of(sym) - 0.5).abs() < 1e-6);

        // Closed form: rising triangle 0.70..0.85 (area 0.075, centroid 0.80)
        // plus rectangle 0.85..1 (area 0.15, centroid 0.925).
        let critical = TrapezoidalSet::new(0.70, 0.85, 1.0, 1.0).unwrap();
        assert!((centroid_of(critical) - 0.19875 / 0.225).abs() < 1e-3);

        // Rectangle 0..0.25 (area 0.25, centroid 0.125) plus falling triangle
        // 0.25..0.40 (area 0.075, centroid 0.30).
        let low = TrapezoidalSet::new(0.0, 0.0, 0.25, 0.40).unwrap();
        assert!((centroid_of(low) - 0.05375 / 0.325).abs() < 1e-3);
    }

    #[test]
    fn zero_aggregate_is_an_error() {
        assert!(matches!(
            defuzzify_centroid(|_| 0.0, 101),
            Err(Error::NoRuleFired)
        ));
        assert!(defuzzify_centroid(|_| 1.0, 1).is_err());
    }

    #[test]
    fn classify_published_crisp_values() {
        let cfg = default_config();
        assert_eq!(classify_level(0.8644, cfg.risk()).unwrap(), "Critical");
        assert_eq!(classify_level(0.4000, cfg.risk()).unwrap(), "Medium");
        assert_eq!(classify_level(0.5202, cfg.risk()).unwrap(), "High");
    }

    #[test]
    fn assess_published_inputs() {
        let cfg = default_config();
        assert_eq!(assess_risk(1.0, 1.0, &cfg).unwrap().level, "Critical");
        assert_eq!(assess_risk(0.7321, 0.9720, &cfg).unwrap().level, "Critical");
        assert_eq!(assess_risk(0.2000, 0.6853, &cfg).unwrap().level, "Medium");
        assert!(assess_risk(1.2, 0.5, &cfg).is_err());
    }

    #[test]
    fn crisp_within_support() {
        let cfg = default_config();
        for &(l, i) in &[(0.0, 0.0), (0.3, 0.7), (0.55, 0.45), (0.9, 0.2), (1.0, 1.0)] {
            let (agg, _) = infer(l, i, &cfg).unwrap();
            let (lo, hi) = agg.support().unwrap();
            let r = assess_risk(l, i, &cfg).unwrap();
            assert!(r.crisp_risk >= lo && r.crisp_risk <= hi);
        }
    }
}
